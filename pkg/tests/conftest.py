from fractions import Fraction

import pytest
from hypothesis import strategies as st

from harmonic_families.graph import Graph

# Figure-1 caterpillar: spine 0-1-2-3-4, two leaves on 1, one on 2, two on 3.
CATERPILLAR_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6), (2, 7), (3, 8), (3, 9)]
CATERPILLAR_U = 2


@pytest.fixture
def caterpillar() -> Graph:
    return Graph(10, CATERPILLAR_EDGES)


def floyd_warshall(g: Graph) -> list[list[int | None]]:
    """All-pairs distances by Floyd-Warshall; independent of the BFS code."""
    n = g.order
    inf = None
    d = [[0 if i == j else (1 if j in g.adjacency[i] else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if d[i][k] is None:
                continue
            for j in range(n):
                if d[k][j] is None:
                    continue
                via = d[i][k] + d[k][j]
                if d[i][j] is None or via < d[i][j]:
                    d[i][j] = via
    return d


def fw_normalized(g: Graph) -> list[Fraction]:
    d = floyd_warshall(g)
    n = g.order
    return [
        sum((Fraction(1, d[u][x]) for x in range(n) if x != u and d[u][x] is not None), Fraction(0))
        / (n - 1)
        for u in range(n)
    ]


@st.composite
def graphs(draw, min_order: int = 2, max_order: int = 12) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> bool:
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
