"""Formula-versus-oracle sweeps, property checks and the errata report."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import closed_forms
from .errors import DisconnectedInput
from .families import MINIMUM_M, MINIMUM_N, Family, FamilySpec, generate
from .graph import Graph, is_connected
from .harmonic import centrality_report, harmonic_number, normalized_vector

# Inclusive (m_lo, m_hi) per family; complete bipartite also sweeps n over the same range.
DEFAULT_RANGES: dict[Family, tuple[int, int]] = {
    Family.PATH: (2, 60),
    Family.CYCLE: (3, 60),
    Family.FAN: (3, 60),
    Family.WHEEL: (4, 60),
    Family.COMPLETE_BIPARTITE: (1, 30),
    Family.LADDER: (2, 60),
    Family.CROWN: (3, 40),
    Family.PRISM: (3, 60),
    Family.STAR: (2, 60),
    Family.BOOK: (1, 60),
    Family.HELM: (3, 60),
}

Evaluator = Callable[[FamilySpec, int], Fraction]


@dataclass(frozen=True)
class Mismatch:
    spec: FamilySpec
    vertex: int
    formula: Fraction
    oracle: Fraction

    def __str__(self) -> str:
        return (
            f"{self.spec} vertex {self.vertex}: formula {self.formula.numerator}/"
            f"{self.formula.denominator} != oracle {self.oracle.numerator}/{self.oracle.denominator}"
        )


@dataclass
class SweepReport:
    family: Family
    m_range: tuple[int, int]
    n_range: tuple[int, int] | None = None
    instances_checked: int = 0
    vertices_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    # (spec, role) pairs whose vertices disagree under the oracle.
    asymmetric_roles: list[tuple[FamilySpec, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.asymmetric_roles

    def summary(self) -> str:
        return (
            f"{self.family.value}: {self.instances_checked} instances, "
            f"{self.vertices_checked} vertices, {len(self.mismatches)} mismatches"
        )


def family_instances(
    family: Family, m_range: tuple[int, int], n_range: tuple[int, int] | None = None
) -> list[FamilySpec]:
    family = Family(family)
    lo, hi = m_range
    if family is Family.COMPLETE_BIPARTITE:
        n_lo, n_hi = n_range if n_range is not None else m_range
        # FamilySpec raises InvalidFamilyParameter for out-of-range bounds.
        FamilySpec(family, lo, n_lo)
        return [FamilySpec(family, m, n) for m in range(lo, hi + 1) for n in range(n_lo, n_hi + 1)]
    FamilySpec(family, lo)
    return [FamilySpec(family, m) for m in range(lo, hi + 1)]


def check_instance(spec: FamilySpec, evaluator: Evaluator | None = None) -> SweepReport:
    return _sweep(spec.family, (spec.m, spec.m), None, [spec], evaluator)


def sweep_family(
    family: Family,
    m_range: tuple[int, int] | None = None,
    n_range: tuple[int, int] | None = None,
    evaluator: Evaluator | None = None,
) -> SweepReport:
    """Compare closed forms with the BFS oracle at every vertex of every instance.

    All mismatches are collected; the sweep never stops early.
    """
    family = Family(family)
    m_range = m_range or DEFAULT_RANGES[family]
    if family is Family.COMPLETE_BIPARTITE and n_range is None:
        n_range = DEFAULT_RANGES[family]
    specs = family_instances(family, m_range, n_range)
    return _sweep(family, m_range, n_range, specs, evaluator)


def _sweep(family, m_range, n_range, specs, evaluator) -> SweepReport:
    if evaluator is None:
        evaluator = closed_forms.closed_form_value
    report = SweepReport(family, m_range, n_range if family is Family.COMPLETE_BIPARTITE else None)
    for spec in specs:
        lg = generate(spec)
        oracle = normalized_vector(lg.graph)
        for v, expected in enumerate(oracle):
            got = evaluator(spec, v)
            if got != expected:
                report.mismatches.append(Mismatch(spec, v, got, expected))
        for role, members in lg.role_classes().items():
            if len({oracle[v] for v in members}) > 1:
                report.asymmetric_roles.append((spec, str(role)))
        report.instances_checked += 1
        report.vertices_checked += lg.graph.order
    return report


def sweep_all(
    ranges: dict[Family, tuple[int, int]] | None = None, evaluator: Evaluator | None = None
) -> list[SweepReport]:
    ranges = {**DEFAULT_RANGES, **(ranges or {})}
    return [sweep_family(f, ranges[f], evaluator=evaluator) for f in Family]


@dataclass(frozen=True)
class RandomGraphSpec:
    """Seeded G(n, p) instance; ``edge_probability`` is an exact rational."""

    order: int
    edge_probability: Fraction
    seed: int

    def __post_init__(self) -> None:
        p = Fraction(self.edge_probability)
        object.__setattr__(self, "edge_probability", p)
        if self.order < 2:
            raise ValueError(f"random graph order must be >= 2, got {self.order}")
        if not 0 <= p <= 1:
            raise ValueError(f"edge probability must lie in [0, 1], got {p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


_TWO64 = 1 << 64


def random_graph(spec: RandomGraphSpec) -> Graph:
    """Erdos-Renyi graph driven by numpy's PCG64 bit generator.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order. Each
    consumes one raw 64-bit word ``w`` from ``PCG64(seed)`` and is kept iff
    ``w / 2**64 < p``, evaluated exactly as ``w * den < num * 2**64``.
    """
    n, p = spec.order, spec.edge_probability
    bitgen = np.random.PCG64(spec.seed)
    n_pairs = n * (n - 1) // 2
    words = bitgen.random_raw(n_pairs) if n_pairs else np.empty(0, dtype=np.uint64)
    threshold = p.numerator * _TWO64
    pairs = itertools.combinations(range(n), 2)
    edges = [pair for pair, w in zip(pairs, words.tolist()) if w * p.denominator < threshold]
    return Graph(n, edges)


CORPUS_PROBABILITIES = (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(9, 10))


def random_corpus(count: int = 500, seed: int = 20240101) -> list[RandomGraphSpec]:
    """Deterministic list of ``count`` specs with order in [2, 100].

    Probabilities cycle through :data:`CORPUS_PROBABILITIES`; orders and
    per-graph seeds come from raw PCG64 words.
    """
    words = np.random.PCG64(seed).random_raw(2 * count).tolist()
    specs = []
    for k in range(count):
        order = 2 + words[2 * k] % 99
        p = CORPUS_PROBABILITIES[k % len(CORPUS_PROBABILITIES)]
        specs.append(RandomGraphSpec(order, p, words[2 * k + 1]))
    return specs


def check_bounds(g: Graph) -> bool:
    return all(0 <= h <= 1 for h in normalized_vector(g))


def check_degree_characterization(g: Graph) -> bool:
    values = normalized_vector(g)
    full = g.order - 1
    return all((values[u] == 1) == (g.degree(u) == full) for u in g.vertices())


def check_complete_characterization(g: Graph) -> bool:
    if g.order >= 2 and not is_connected(g):
        raise DisconnectedInput("the complete-graph characterization applies to connected graphs")
    all_ones = all(h == 1 for h in normalized_vector(g))
    return all_ones == g.is_complete()


def check_isolated_zero(g: Graph) -> bool:
    values = normalized_vector(g)
    return all(values[u] == 0 for u in g.vertices() if g.degree(u) == 0)


@dataclass
class PropertyReport:
    graphs_checked: int = 0
    disconnected: int = 0
    isolated_vertices: int = 0
    failures: list[tuple[RandomGraphSpec, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_random_properties(specs: Iterable[RandomGraphSpec]) -> PropertyReport:
    """Bounds, degree characterization and isolated-vertex zeros on each spec."""
    report = PropertyReport()
    for spec in specs:
        g = random_graph(spec)
        rep = centrality_report(g)
        values = rep.normalized()
        full = g.order - 1
        if not all(0 <= h <= 1 for h in values):
            report.failures.append((spec, "bounds"))
        if not all((values[u] == 1) == (g.degree(u) == full) for u in g.vertices()):
            report.failures.append((spec, "degree characterization"))
        isolated = [u for u in g.vertices() if g.degree(u) == 0]
        if any(values[u] != 0 for u in isolated):
            report.failures.append((spec, "isolated vertex nonzero"))
        report.isolated_vertices += len(isolated)
        report.disconnected += not is_connected(g)
        report.graphs_checked += 1
    return report


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test for small graphs (a handful of vertices)."""
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.order
    g_deg, h_deg = g.degrees(), h.degrees()
    target = {frozenset(e) for e in h.edges}
    for perm in itertools.permutations(range(n)):
        if any(g_deg[v] != h_deg[perm[v]] for v in range(n)):
            continue
        if all(frozenset((perm[a], perm[b])) in target for a, b in g.edges):
            return True
    return False


@dataclass(frozen=True)
class Erratum:
    key: str
    summary: str
    cases_checked: int
    confirmed: bool
    detail: str


def _path_endpoint_erratum(m_max: int = 60) -> Erratum:
    ms = range(2, m_max + 1)
    stated_ok = proof_wrong = 0
    for m in ms:
        oracle = normalized_vector(generate(FamilySpec(Family.PATH, m)).graph)[0]
        stated = harmonic_number(m - 1) / (m - 1)
        proof = harmonic_number(m) / (m - 1)
        stated_ok += stated == oracle
        proof_wrong += proof != oracle
    n = len(ms)
    ex_oracle = normalized_vector(generate(FamilySpec(Family.PATH, 5)).graph)[0]
    ex_proof = harmonic_number(5) / 4
    return Erratum(
        "path-endpoint-proof-conclusion",
        "path endpoints: stated H_{m-1}/(m-1) versus proof conclusion H_m/(m-1)",
        n,
        stated_ok == n and proof_wrong == n,
        f"m in [2, {m_max}]: stated form matches oracle {stated_ok}/{n}, "
        f"H_m/(m-1) mismatches {proof_wrong}/{n}; m=5: oracle {ex_oracle}, H_5/4 = {ex_proof}",
    )


def _path_interior_erratum(m_max: int = 60) -> Erratum:
    cases = stated_ok = proof_wrong = 0
    for m in range(3, m_max + 1):
        oracle = normalized_vector(generate(FamilySpec(Family.PATH, m)).graph)
        for i in range(2, m):
            stated = (harmonic_number(i - 1) + harmonic_number(m - i)) / (m - 1)
            proof = (harmonic_number(i - 1) + harmonic_number(m - 1)) / (m - 1)
            cases += 1
            stated_ok += stated == oracle[i - 1]
            proof_wrong += proof != oracle[i - 1]
    return Erratum(
        "path-interior-proof-line",
        "path interior: H_{i-1}+H_{m-i} versus the proof line H_{i-1}+H_{m-1}",
        cases,
        stated_ok == cases and proof_wrong == cases,
        f"interior vertices of P_m, m in [3, {m_max}]: H_{{m-i}} form matches oracle "
        f"{stated_ok}/{cases}, H_{{m-1}} form mismatches {proof_wrong}/{cases}",
    )


def _bipartite_bound_erratum(limit: int = 30) -> Erratum:
    cases = ok = 0
    for m in range(MINIMUM_N, limit + 1):
        for n in range(MINIMUM_N, limit + 1):
            if m >= 2 and n >= 2:
                continue
            spec = FamilySpec(Family.COMPLETE_BIPARTITE, m, n)
            expected = normalized_vector(generate(spec).graph)
            got = closed_forms.closed_form_vector(spec)
            cases += 1
            ok += got == expected
    k12 = closed_forms.complete_bipartite_formula(1, 2, "partition_u")
    return Erratum(
        "kbipartite-parameter-bound",
        "complete bipartite: family definition asks m, n >= 2, the formula is stated for m, n > 0",
        cases,
        ok == cases,
        f"instances with min(m, n) = 1, m, n <= {limit}: formula matches oracle {ok}/{cases}; "
        f"K_1,2 U side = {k12}",
    )


def _prism_forms_erratum(m_max: int = 60) -> Erratum:
    odd = [m for m in range(3, m_max + 1) if m % 2]
    agree = sum(
        closed_forms.prism_formula(m) == closed_forms.prism_formula_odd_alternate(m) for m in odd
    )
    return Erratum(
        "prism-odd-two-forms",
        "prism, odd m: -(m-3)/(m+1) in the statement versus +(3-m)/(m+1) in the conclusion",
        len(odd),
        agree == len(odd),
        f"odd m in [3, {m_max}]: both forms agree {agree}/{len(odd)}",
    )


def _crown_small_erratum() -> Erratum:
    # Cr_2 is two disjoint edges; the crown closed form is not valid there.
    cr2 = Graph(4, [(0, 3), (1, 2)])
    oracle = normalized_vector(cr2)
    formula = Fraction(9 * 2 - 7, 12 * 2 - 6)
    return Erratum(
        "crown-lower-bound",
        "crown: no lower bound on m is given; the closed form fails at m = 2",
        1,
        all(h != formula for h in oracle),
        f"Cr_2 oracle {oracle[0]} at every vertex, closed form {formula}",
    )


def errata_report() -> list[Erratum]:
    return [
        _path_endpoint_erratum(),
        _path_interior_erratum(),
        _bipartite_bound_erratum(),
        _prism_forms_erratum(),
        _crown_small_erratum(),
    ]
