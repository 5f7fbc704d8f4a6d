"""Immutable simple undirected graphs and unweighted geodesic distances.

Vertices are dense integer ids ``0 .. order-1``. All centrality values in the
package are carried as :class:`fractions.Fraction` (aliased :data:`Rational`)
so that closed forms and the BFS oracle can be compared by exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyGraph, InvalidVertex, SelfLoop

Rational = Fraction


class Graph:
    """Simple undirected graph over vertices ``0 .. order-1``.

    ``edges`` keeps the first-seen orientation and insertion order of each
    distinct edge; equality and hashing depend only on order and adjacency.
    """

    __slots__ = ("_order", "_adj", "_sorted_adj", "_edges")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 1:
            raise EmptyGraph(f"graph order must be >= 1, got {order}")
        adj: list[set[int]] = [set() for _ in range(order)]
        kept: list[tuple[int, int]] = []
        for u, v in edges:
            u, v = int(u), int(v)
            for w in (u, v):
                if not 0 <= w < order:
                    raise InvalidVertex(f"vertex {w} out of range [0, {order})")
            if u == v:
                raise SelfLoop(u)
            if v in adj[u]:
                continue
            adj[u].add(v)
            adj[v].add(u)
            kept.append((u, v))
        self._order = order
        self._adj = tuple(frozenset(s) for s in adj)
        self._sorted_adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = tuple(kept)

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._order)

    def _check(self, u: int) -> int:
        if not isinstance(u, int) or not 0 <= u < self._order:
            raise InvalidVertex(f"vertex {u!r} out of range [0, {self._order})")
        return u

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[self._check(u)]

    def sorted_neighbors(self, u: int) -> tuple[int, ...]:
        return self._sorted_adj[self._check(u)]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        return self.neighbors(u) | {u}

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def is_complete(self) -> bool:
        n = self._order
        return self.size == n * (n - 1) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self._order, (*self._edges, (u, v)))

    def without_edge(self, u: int, v: int) -> "Graph":
        drop = {(u, v), (v, u)}
        return Graph(self._order, (e for e in self._edges if e not in drop))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self.size})"


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(order, edges)


def neighbors(g: Graph, u: int) -> frozenset[int]:
    return g.neighbors(u)


def degree(g: Graph, u: int) -> int:
    return g.degree(u)


def complete_graph(m: int) -> Graph:
    return Graph(m, ((i, j) for i in range(m) for j in range(i + 1, m)))


def edgeless_graph(m: int) -> Graph:
    return Graph(m)


@dataclass(frozen=True)
class DistanceVector:
    """Geodesic distances from ``source``; ``None`` marks unreachable vertices."""

    source: int
    dist: tuple[int | None, ...]

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]

    def reachable(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d is not None]

    def layer_counts(self) -> dict[int, int]:
        """Map distance ``d >= 1`` to the number of vertices at that distance."""
        counts: dict[int, int] = {}
        for d in self.dist:
            if d:
                counts[d] = counts.get(d, 0) + 1
        return counts


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    """Level-synchronous BFS from ``source``.

    Each frontier is expanded in ascending vertex order; the resulting
    distances do not depend on that order.
    """
    g._check(source)
    adj = g.adjacency
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    unseen = set(range(g.order))
    unseen.discard(source)
    frontier: Sequence[int] = (source,)
    level = 0
    while frontier and unseen:
        level += 1
        nxt: set[int] = set()
        for v in frontier:
            nxt |= adj[v] & unseen
        unseen -= nxt
        for v in nxt:
            dist[v] = level
        frontier = sorted(nxt)
    return DistanceVector(source, tuple(dist))


def all_pairs_distances(g: Graph) -> list[DistanceVector]:
    return [bfs_distances(g, s) for s in g.vertices()]


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0).dist)


def format_rational(q: Fraction) -> str:
    """Lowest-terms ``p/q`` with an explicit denominator, e.g. ``1/1``."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        raise ValueError(f"expected 'p/q', got {text!r}")
    q = Fraction(int(num), int(den))
    return q
