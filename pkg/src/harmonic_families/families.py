"""Generators for the eleven named graph families.

Each generator returns a :class:`LabeledGraph` whose vertex ids follow a
fixed canonical index map (documented on :func:`generate`), together with the
structural role of every vertex. The closed-form evaluators and the CLI labels
rely on these maps, so they must not change.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import InvalidFamilyParameter, ParseError
from .graph import Graph


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    FAN = "fan"
    WHEEL = "wheel"
    COMPLETE_BIPARTITE = "kbipartite"
    LADDER = "ladder"
    CROWN = "crown"
    PRISM = "prism"
    STAR = "star"
    BOOK = "book"
    HELM = "helm"


# Smallest admissible m (and n for complete bipartite).
MINIMUM_M: dict[Family, int] = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.FAN: 3,
    Family.WHEEL: 4,
    Family.COMPLETE_BIPARTITE: 1,
    Family.LADDER: 2,
    Family.CROWN: 3,
    Family.PRISM: 3,
    Family.STAR: 2,
    Family.BOOK: 1,
    Family.HELM: 3,
}
MINIMUM_N = 1


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its size parameters.

    ``n`` is used only by :attr:`Family.COMPLETE_BIPARTITE`.
    """

    family: Family
    m: int
    n: int | None = None

    def __post_init__(self) -> None:
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        lo = MINIMUM_M[family]
        if self.m < lo:
            raise InvalidFamilyParameter(family.value, "m", self.m, lo)
        if family is Family.COMPLETE_BIPARTITE:
            if self.n is None:
                raise ValueError("kbipartite requires both m and n")
            if self.n < MINIMUM_N:
                raise InvalidFamilyParameter(family.value, "n", self.n, MINIMUM_N)
        elif self.n is not None:
            raise ValueError(f"{family.value} takes a single parameter m")

    @property
    def order(self) -> int:
        return family_order(self)

    def __str__(self) -> str:
        return format_family_spec(self)


def Path(m: int) -> FamilySpec:
    return FamilySpec(Family.PATH, m)


def Cycle(m: int) -> FamilySpec:
    return FamilySpec(Family.CYCLE, m)


def Fan(m: int) -> FamilySpec:
    return FamilySpec(Family.FAN, m)


def Wheel(m: int) -> FamilySpec:
    return FamilySpec(Family.WHEEL, m)


def CompleteBipartite(m: int, n: int) -> FamilySpec:
    return FamilySpec(Family.COMPLETE_BIPARTITE, m, n)


def Ladder(m: int) -> FamilySpec:
    return FamilySpec(Family.LADDER, m)


def Crown(m: int) -> FamilySpec:
    return FamilySpec(Family.CROWN, m)


def Prism(m: int) -> FamilySpec:
    return FamilySpec(Family.PRISM, m)


def Star(m: int) -> FamilySpec:
    return FamilySpec(Family.STAR, m)


def Book(m: int) -> FamilySpec:
    return FamilySpec(Family.BOOK, m)


def Helm(m: int) -> FamilySpec:
    return FamilySpec(Family.HELM, m)


class RoleKind(str, enum.Enum):
    HUB = "hub"
    PATH_END = "path_end"
    PATH_INTERIOR = "path_interior"
    CYCLE_VERTEX = "cycle_vertex"
    FAN_PATH_END = "fan_path_end"
    FAN_PATH_INTERIOR = "fan_path_interior"
    WHEEL_RIM = "wheel_rim"
    PARTITION_U = "partition_u"
    PARTITION_V = "partition_v"
    LADDER_END = "ladder_end"
    LADDER_INTERIOR = "ladder_interior"
    CROWN_VERTEX = "crown_vertex"
    PRISM_VERTEX = "prism_vertex"
    STAR_LEAF = "star_leaf"
    BOOK_CENTER = "book_center"
    BOOK_PAGE = "book_page"
    HELM_CENTER = "helm_center"
    HELM_RIM = "helm_rim"
    HELM_PENDANT = "helm_pendant"


@dataclass(frozen=True)
class VertexRole:
    """Structural role; ``index`` is the 1-based position i for indexed roles."""

    kind: RoleKind
    index: int | None = None

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}({self.index})"


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    spec: FamilySpec
    roles: tuple[VertexRole, ...]
    labels: tuple[str, ...]

    def role_classes(self) -> dict[VertexRole, list[int]]:
        classes: dict[VertexRole, list[int]] = {}
        for v, role in enumerate(self.roles):
            classes.setdefault(role, []).append(v)
        return classes


def family_order(spec: FamilySpec) -> int:
    m, f = spec.m, spec.family
    if f in (Family.PATH, Family.CYCLE):
        return m
    if f in (Family.FAN, Family.WHEEL, Family.STAR):
        return m + 1
    if f is Family.COMPLETE_BIPARTITE:
        return m + spec.n
    if f in (Family.LADDER, Family.CROWN, Family.PRISM):
        return 2 * m
    if f is Family.BOOK:
        return 2 * (m + 1)
    if f is Family.HELM:
        return 2 * m + 1
    raise AssertionError(f)


def edge_count(spec: FamilySpec) -> int:
    """Number of edges of the family instance, counted from its definition."""
    m, f = spec.m, spec.family
    counts = {
        Family.PATH: lambda: m - 1,
        Family.CYCLE: lambda: m,
        Family.FAN: lambda: 2 * m - 1,
        Family.WHEEL: lambda: 2 * m,
        Family.COMPLETE_BIPARTITE: lambda: m * spec.n,
        Family.LADDER: lambda: 3 * m - 2,
        Family.CROWN: lambda: m * (m - 1),
        Family.PRISM: lambda: 3 * m,
        Family.STAR: lambda: m,
        Family.BOOK: lambda: 3 * m + 1,
        Family.HELM: lambda: 3 * m,
    }
    return counts[f]()


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return _path_edges(vertices) + [(vertices[-1], vertices[0])]


def _path(m):
    edges = _path_edges(list(range(m)))
    roles = [
        VertexRole(RoleKind.PATH_END) if i in (1, m) else VertexRole(RoleKind.PATH_INTERIOR, i)
        for i in range(1, m + 1)
    ]
    return edges, roles, [f"u{i}" for i in range(1, m + 1)]


def _cycle(m):
    edges = _cycle_edges(list(range(m)))
    return edges, [VertexRole(RoleKind.CYCLE_VERTEX)] * m, [f"u{i}" for i in range(1, m + 1)]


def _fan(m):
    spokes = [(0, i) for i in range(1, m + 1)]
    edges = spokes + _path_edges(list(range(1, m + 1)))
    roles = [VertexRole(RoleKind.HUB)] + [
        VertexRole(RoleKind.FAN_PATH_END if i in (1, m) else RoleKind.FAN_PATH_INTERIOR)
        for i in range(1, m + 1)
    ]
    return edges, roles, [f"u{i}" for i in range(m + 1)]


def _wheel(m):
    spokes = [(0, i) for i in range(1, m + 1)]
    edges = spokes + _cycle_edges(list(range(1, m + 1)))
    roles = [VertexRole(RoleKind.HUB)] + [VertexRole(RoleKind.WHEEL_RIM)] * m
    return edges, roles, [f"u{i}" for i in range(m + 1)]


def _complete_bipartite(m, n):
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    roles = [VertexRole(RoleKind.PARTITION_U)] * m + [VertexRole(RoleKind.PARTITION_V)] * n
    labels = [f"u{i}" for i in range(1, m + 1)] + [f"v{j}" for j in range(1, n + 1)]
    return edges, roles, labels


def _ladder(m):
    top, bottom = list(range(m)), list(range(m, 2 * m))
    edges = _path_edges(top) + _path_edges(bottom) + [(i, m + i) for i in range(m)]
    side = [
        VertexRole(RoleKind.LADDER_END) if i in (1, m) else VertexRole(RoleKind.LADDER_INTERIOR, i)
        for i in range(1, m + 1)
    ]
    return edges, side * 2, _product_labels(m)


def _crown(m):
    edges = [(i, m + j) for i in range(m) for j in range(m) if i != j]
    labels = [f"u{i}" for i in range(1, m + 1)] + [f"v{j}" for j in range(1, m + 1)]
    return edges, [VertexRole(RoleKind.CROWN_VERTEX)] * (2 * m), labels


def _prism(m):
    top, bottom = list(range(m)), list(range(m, 2 * m))
    edges = _cycle_edges(top) + _cycle_edges(bottom) + [(i, m + i) for i in range(m)]
    return edges, [VertexRole(RoleKind.PRISM_VERTEX)] * (2 * m), _product_labels(m)


def _product_labels(m):
    # (u_i, v_j) -> (j - 1) * m + i - 1
    return [f"u{i}v{j}" for j in (1, 2) for i in range(1, m + 1)]


def _star(m):
    edges = [(0, i) for i in range(1, m + 1)]
    roles = [VertexRole(RoleKind.HUB)] + [VertexRole(RoleKind.STAR_LEAF)] * m
    return edges, roles, [f"u{i}" for i in range(m + 1)]


def _book(m):
    # (u_i, v_1) -> 2i, (u_i, v_2) -> 2i + 1
    edges = [(0, 1)]
    for i in range(1, m + 1):
        edges += [(0, 2 * i), (1, 2 * i + 1), (2 * i, 2 * i + 1)]
    roles = [VertexRole(RoleKind.BOOK_CENTER)] * 2 + [VertexRole(RoleKind.BOOK_PAGE)] * (2 * m)
    labels = [f"u{i}v{j}" for i in range(m + 1) for j in (1, 2)]
    return edges, roles, labels


def _helm(m):
    rim = list(range(1, m + 1))
    edges = [(0, i) for i in rim] + _cycle_edges(rim) + [(i, m + i) for i in rim]
    roles = (
        [VertexRole(RoleKind.HELM_CENTER)]
        + [VertexRole(RoleKind.HELM_RIM)] * m
        + [VertexRole(RoleKind.HELM_PENDANT)] * m
    )
    labels = [f"u{i}" for i in range(m + 1)] + [f"v{j}" for j in rim]
    return edges, roles, labels


_BUILDERS = {
    Family.PATH: _path,
    Family.CYCLE: _cycle,
    Family.FAN: _fan,
    Family.WHEEL: _wheel,
    Family.LADDER: _ladder,
    Family.CROWN: _crown,
    Family.PRISM: _prism,
    Family.STAR: _star,
    Family.BOOK: _book,
    Family.HELM: _helm,
}


def generate(spec: FamilySpec) -> LabeledGraph:
    """Build the canonical instance of ``spec``.

    Index maps (paper-style labels on the left):

    * path, cycle: ``u_i -> i-1``
    * fan, wheel, star: ``u_0 -> 0``, ``u_i -> i``
    * kbipartite, crown: ``u_i -> i-1``, ``v_j -> m+j-1``
    * ladder, prism: ``(u_i, v_1) -> i-1``, ``(u_i, v_2) -> m+i-1``
    * book: ``(u_0, v_1) -> 0``, ``(u_0, v_2) -> 1``, ``(u_i, v_1) -> 2i``,
      ``(u_i, v_2) -> 2i+1``
    * helm: ``u_0 -> 0``, ``u_i -> i``, ``v_j -> m+j``
    """
    if spec.family is Family.COMPLETE_BIPARTITE:
        edges, roles, labels = _complete_bipartite(spec.m, spec.n)
    else:
        edges, roles, labels = _BUILDERS[spec.family](spec.m)
    graph = Graph(family_order(spec), edges)
    return LabeledGraph(graph, spec, tuple(roles), tuple(labels))


_SPEC_RE = re.compile(r"^([a-z]+):(\d+)(?:,(\d+))?$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``name:m`` or ``kbipartite:m,n`` (no whitespace allowed)."""
    match = _SPEC_RE.match(text)
    if match is None:
        raise ParseError(f"malformed family spec {text!r}; expected name:m or kbipartite:m,n")
    name, m, n = match.groups()
    try:
        family = Family(name)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise ParseError(f"unknown family {name!r}; known families: {known}") from None
    if (family is Family.COMPLETE_BIPARTITE) != (n is not None):
        arity = "m,n" if family is Family.COMPLETE_BIPARTITE else "m"
        raise ParseError(f"{name} expects parameters {arity}, got {text!r}")
    return FamilySpec(family, int(m), None if n is None else int(n))


def format_family_spec(spec: FamilySpec) -> str:
    if spec.family is Family.COMPLETE_BIPARTITE:
        return f"{spec.family.value}:{spec.m},{spec.n}"
    return f"{spec.family.value}:{spec.m}"
