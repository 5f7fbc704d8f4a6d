"""Closed-form normalized harmonic centrality for the eleven families.

These evaluators never build a graph. Vertex indices ``i`` follow the
1-based labelling of each family (``i = 0`` is the hub where one exists);
:func:`evaluate` translates canonical vertex ids into those indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidFamilyParameter, InvalidVertex
from .families import MINIMUM_M, MINIMUM_N, Family, FamilySpec, RoleKind, VertexRole, family_order
from .harmonic import harmonic_number as H


def _check_m(family: Family, m: int) -> None:
    if m < MINIMUM_M[family]:
        raise InvalidFamilyParameter(family.value, "m", m, MINIMUM_M[family])


def _check_index(family: Family, name: str, i: int, lo: int, hi: int) -> None:
    if not lo <= i <= hi:
        raise InvalidFamilyParameter(family.value, name, i, lo, hi)


def path_formula(m: int, i: int) -> Fraction:
    _check_m(Family.PATH, m)
    _check_index(Family.PATH, "i", i, 1, m)
    if i in (1, m):
        return H(m - 1) / (m - 1)
    return (H(i - 1) + H(m - i)) / (m - 1)


def cycle_formula(m: int) -> Fraction:
    _check_m(Family.CYCLE, m)
    if m % 2:
        return 2 * H((m - 1) // 2) / (m - 1)
    return Fraction(2, m - 1) * (H((m - 2) // 2) + Fraction(1, m))


def fan_formula(m: int, i: int) -> Fraction:
    _check_m(Family.FAN, m)
    _check_index(Family.FAN, "i", i, 0, m)
    if i == 0:
        return Fraction(1)
    if i in (1, m):
        return Fraction(m + 2, 2 * m)
    return Fraction(m + 3, 2 * m)


def wheel_formula(m: int, i: int) -> Fraction:
    _check_m(Family.WHEEL, m)
    _check_index(Family.WHEEL, "i", i, 0, m)
    if i == 0:
        return Fraction(1)
    return Fraction(m + 3, 2 * m)


def complete_bipartite_formula(m: int, n: int, side: RoleKind) -> Fraction:
    _check_m(Family.COMPLETE_BIPARTITE, m)
    if n < MINIMUM_N:
        raise InvalidFamilyParameter(Family.COMPLETE_BIPARTITE.value, "n", n, MINIMUM_N)
    side = RoleKind(side)
    if side is RoleKind.PARTITION_U:
        return Fraction(m + 2 * n - 1, 2 * (m + n - 1))
    if side is RoleKind.PARTITION_V:
        return Fraction(2 * m + n - 1, 2 * (m + n - 1))
    raise ValueError(f"side must be partition_u or partition_v, got {side}")


def ladder_formula(m: int, i: int) -> Fraction:
    """Value at ``(u_i, v_j)``; the same for both rails ``j = 1, 2``."""
    _check_m(Family.LADDER, m)
    _check_index(Family.LADDER, "i", i, 1, m)
    if i in (1, m):
        return (2 * H(m - 1) + Fraction(1, m)) / (2 * m - 1)
    inner = 2 * (H(i - 1) + H(m - i)) + Fraction(1, i) + Fraction(1, m - i + 1) - 1
    return inner / (2 * m - 1)


def crown_formula(m: int) -> Fraction:
    _check_m(Family.CROWN, m)
    return Fraction(9 * m - 7, 12 * m - 6)


def prism_formula(m: int) -> Fraction:
    _check_m(Family.PRISM, m)
    if m % 2:
        raw = 4 * H((m - 1) // 2) - Fraction(m - 3, m + 1)
    else:
        raw = 4 * H(m // 2) + Fraction(2, m + 2) - Fraction(m + 2, m)
    return raw / (2 * m - 1)


def prism_formula_odd_alternate(m: int) -> Fraction:
    """Odd-m prism value written with ``+(3 - m)/(m + 1)``."""
    _check_m(Family.PRISM, m)
    if m % 2 == 0:
        raise ValueError("alternate prism form applies to odd m only")
    return (4 * H((m - 1) // 2) + Fraction(3 - m, m + 1)) / (2 * m - 1)


def star_formula(m: int, i: int) -> Fraction:
    _check_m(Family.STAR, m)
    _check_index(Family.STAR, "i", i, 0, m)
    if i == 0:
        return Fraction(1)
    return Fraction(m + 1, 2 * m)


def book_formula(m: int, role: RoleKind) -> Fraction:
    _check_m(Family.BOOK, m)
    role = RoleKind(role)
    if role is RoleKind.BOOK_CENTER:
        return Fraction(3 * m + 2, 4 * m + 2)
    if role is RoleKind.BOOK_PAGE:
        return Fraction(5 * (m + 2), 6 * (2 * m + 1))
    raise ValueError(f"role must be book_center or book_page, got {role}")


def helm_formula(m: int, role: RoleKind) -> Fraction:
    _check_m(Family.HELM, m)
    role = RoleKind(role)
    if role is RoleKind.HELM_CENTER:
        return Fraction(3, 4)
    if role is RoleKind.HELM_RIM:
        return Fraction(5 * m + 15, 12 * m)
    if role is RoleKind.HELM_PENDANT:
        return Fraction(7 * m + 17, 24 * m)
    raise ValueError(f"role must be helm_center, helm_rim or helm_pendant, got {role}")


@dataclass(frozen=True)
class FormulaQuery:
    spec: FamilySpec
    vertex: int


@dataclass(frozen=True)
class FormulaResult:
    value: Fraction
    role: VertexRole
    formula: str


def vertex_role(spec: FamilySpec, v: int) -> tuple[VertexRole, int]:
    """Role of canonical vertex ``v`` and its family index ``i``.

    Computed from the index map alone, independently of the generators.
    """
    n_vertices = family_order(spec)
    if not 0 <= v < n_vertices:
        raise InvalidVertex(f"vertex {v} out of range [0, {n_vertices}) for {spec}")
    f, m = spec.family, spec.m
    if f is Family.PATH:
        i = v + 1
        if i in (1, m):
            return VertexRole(RoleKind.PATH_END), i
        return VertexRole(RoleKind.PATH_INTERIOR, i), i
    if f is Family.CYCLE:
        return VertexRole(RoleKind.CYCLE_VERTEX), v + 1
    if f is Family.FAN:
        if v == 0:
            return VertexRole(RoleKind.HUB), 0
        kind = RoleKind.FAN_PATH_END if v in (1, m) else RoleKind.FAN_PATH_INTERIOR
        return VertexRole(kind), v
    if f is Family.WHEEL:
        return VertexRole(RoleKind.HUB if v == 0 else RoleKind.WHEEL_RIM), v
    if f is Family.STAR:
        return VertexRole(RoleKind.HUB if v == 0 else RoleKind.STAR_LEAF), v
    if f is Family.COMPLETE_BIPARTITE:
        if v < m:
            return VertexRole(RoleKind.PARTITION_U), v + 1
        return VertexRole(RoleKind.PARTITION_V), v - m + 1
    if f is Family.CROWN:
        return VertexRole(RoleKind.CROWN_VERTEX), v % m + 1
    if f is Family.PRISM:
        return VertexRole(RoleKind.PRISM_VERTEX), v % m + 1
    if f is Family.LADDER:
        i = v % m + 1
        if i in (1, m):
            return VertexRole(RoleKind.LADDER_END), i
        return VertexRole(RoleKind.LADDER_INTERIOR, i), i
    if f is Family.BOOK:
        i = v // 2
        return VertexRole(RoleKind.BOOK_CENTER if i == 0 else RoleKind.BOOK_PAGE), i
    if f is Family.HELM:
        if v == 0:
            return VertexRole(RoleKind.HELM_CENTER), 0
        if v <= m:
            return VertexRole(RoleKind.HELM_RIM), v
        return VertexRole(RoleKind.HELM_PENDANT), v - m
    raise AssertionError(f)


def closed_form_value(spec: FamilySpec, v: int) -> Fraction:
    return evaluate(FormulaQuery(spec, v)).value


def evaluate(query: FormulaQuery) -> FormulaResult:
    spec, v = query.spec, query.vertex
    role, i = vertex_role(spec, v)
    f, m = spec.family, spec.m
    if f is Family.PATH:
        value = path_formula(m, i)
    elif f is Family.CYCLE:
        value = cycle_formula(m)
    elif f is Family.FAN:
        value = fan_formula(m, i)
    elif f is Family.WHEEL:
        value = wheel_formula(m, i)
    elif f is Family.COMPLETE_BIPARTITE:
        value = complete_bipartite_formula(m, spec.n, role.kind)
    elif f is Family.LADDER:
        value = ladder_formula(m, i)
    elif f is Family.CROWN:
        value = crown_formula(m)
    elif f is Family.PRISM:
        value = prism_formula(m)
    elif f is Family.STAR:
        value = star_formula(m, i)
    elif f is Family.BOOK:
        value = book_formula(m, role.kind)
    else:
        value = helm_formula(m, role.kind)
    return FormulaResult(value, role, f.value)


def closed_form_vector(spec: FamilySpec) -> list[Fraction]:
    return [closed_form_value(spec, v) for v in range(family_order(spec))]
