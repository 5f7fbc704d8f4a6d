"""Exact harmonic centrality computed from BFS distances.

This is the brute-force oracle: every value comes from actual geodesic
distances, never from a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import TrivialGraph
from .graph import DistanceVector, Graph, bfs_distances


@lru_cache(maxsize=None)
def harmonic_number(n: int) -> Fraction:
    """``H_n = 1 + 1/2 + ... + 1/n`` with ``H_0 = 0``."""
    if n < 0:
        raise ValueError(f"harmonic_number requires n >= 0, got {n}")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total


def _reciprocal_sum(dv: DistanceVector) -> Fraction:
    # Group by distance so each layer costs one rational addition.
    total = Fraction(0)
    for d, count in sorted(dv.layer_counts().items()):
        total += Fraction(count, d)
    return total


def _require_nontrivial(g: Graph) -> None:
    if g.order < 2:
        raise TrivialGraph("harmonic centrality needs at least two vertices")


def raw_harmonic(g: Graph, u: int) -> Fraction:
    """Sum of ``1/d(x, u)`` over ``x != u``; unreachable ``x`` add nothing."""
    _require_nontrivial(g)
    return _reciprocal_sum(bfs_distances(g, u))


def normalized_harmonic(g: Graph, u: int) -> Fraction:
    return raw_harmonic(g, u) / (g.order - 1)


@dataclass(frozen=True)
class CentralityValue:
    vertex: int
    raw: Fraction
    normalized: Fraction


@dataclass(frozen=True)
class CentralityReport:
    order: int
    values: tuple[CentralityValue, ...]
    ranking: tuple[int, ...]

    def normalized(self) -> list[Fraction]:
        return [v.normalized for v in self.values]

    def raw(self) -> list[Fraction]:
        return [v.raw for v in self.values]

    def top(self, k: int) -> list[CentralityValue]:
        return [self.values[v] for v in self.ranking[:k]]


def rank_vertices(values: list[Fraction]) -> tuple[int, ...]:
    """Vertex ids by descending value, ties broken by ascending id."""
    return tuple(sorted(range(len(values)), key=lambda v: (-values[v], v)))


def centrality_report(g: Graph) -> CentralityReport:
    _require_nontrivial(g)
    denom = g.order - 1
    values = []
    for u in g.vertices():
        raw = _reciprocal_sum(bfs_distances(g, u))
        values.append(CentralityValue(u, raw, raw / denom))
    ranking = rank_vertices([v.normalized for v in values])
    return CentralityReport(g.order, tuple(values), ranking)


def normalized_vector(g: Graph) -> list[Fraction]:
    return centrality_report(g).normalized()
