from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from harmonic_families.errors import TrivialGraph
from harmonic_families.families import Crown, Cycle, Prism, Star, Wheel, generate
from harmonic_families.graph import Graph, complete_graph, is_connected
from harmonic_families.harmonic import (
    centrality_report,
    harmonic_number,
    normalized_harmonic,
    normalized_vector,
    raw_harmonic,
)

from conftest import CATERPILLAR_U, fw_normalized, graphs


@pytest.mark.parametrize("n, expected", [(0, Fraction(0)), (1, Fraction(1)), (3, Fraction(11, 6)), (5, Fraction(137, 60))])
def test_harmonic_number(n, expected):
    assert harmonic_number(n) == expected


@given(st.integers(0, 200))
def test_harmonic_number_recurrence(n):
    assert harmonic_number(n + 1) - harmonic_number(n) == Fraction(1, n + 1)


def test_harmonic_number_negative():
    with pytest.raises(ValueError):
        harmonic_number(-1)


def test_raw_examples(caterpillar):
    assert raw_harmonic(Graph(2, [(0, 1)]), 0) == 1
    assert raw_harmonic(Graph(3), 0) == 0
    assert raw_harmonic(caterpillar, CATERPILLAR_U) == 6


def test_normalized_examples(caterpillar):
    assert normalized_harmonic(caterpillar, CATERPILLAR_U) == Fraction(2, 3)
    assert all(normalized_harmonic(complete_graph(4), u) == 1 for u in range(4))
    c6 = generate(Cycle(6)).graph
    assert all(normalized_harmonic(c6, u) == Fraction(2, 3) for u in range(6))


def test_trivial_graph_rejected():
    with pytest.raises(TrivialGraph):
        raw_harmonic(Graph(1), 0)
    with pytest.raises(TrivialGraph):
        normalized_harmonic(Graph(1), 0)
    with pytest.raises(TrivialGraph):
        centrality_report(Graph(1))


def test_report_star():
    rep = centrality_report(generate(Star(3)).graph)
    assert rep.ranking == (0, 1, 2, 3)
    assert rep.normalized() == [1, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)]
    assert rep.raw() == [3, 2, 2, 2]


def test_report_p2_tie_break():
    rep = centrality_report(Graph(2, [(0, 1)]))
    assert rep.normalized() == [1, 1]
    assert rep.ranking == (0, 1)


def test_report_wheel_4():
    rep = centrality_report(generate(Wheel(4)).graph)
    assert rep.normalized() == [1] + [Fraction(7, 8)] * 4
    assert rep.ranking[0] == 0


@given(graphs())
def test_matches_floyd_warshall_oracle(g):
    assert normalized_vector(g) == fw_normalized(g)


@given(graphs())
def test_report_structure(g):
    rep = centrality_report(g)
    assert [v.vertex for v in rep.values] == list(range(g.order))
    assert sorted(rep.ranking) == list(range(g.order))
    for v in rep.values:
        assert v.normalized == v.raw / (g.order - 1)
    vals = rep.normalized()
    for a, b in zip(rep.ranking, rep.ranking[1:]):
        assert vals[a] > vals[b] or (vals[a] == vals[b] and a < b)


@given(graphs())
def test_bounds(g):
    assert all(0 <= h <= 1 for h in normalized_vector(g))


@given(graphs())
def test_value_one_iff_dominating(g):
    vals = normalized_vector(g)
    for u in g.vertices():
        assert (vals[u] == 1) == (g.degree(u) == g.order - 1)


@given(graphs())
def test_isolated_vertices_score_zero(g):
    vals = normalized_vector(g)
    for u in g.vertices():
        if g.degree(u) == 0:
            assert vals[u] == 0


@given(graphs())
def test_all_ones_iff_complete_on_connected(g):
    if is_connected(g):
        assert all(h == 1 for h in normalized_vector(g)) == g.is_complete()


@given(graphs(), st.data())
def test_adding_edge_strictly_increases_endpoint(g, data):
    missing = [(u, v) for u in g.vertices() for v in g.vertices() if u < v and not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    h = g.with_edge(u, v)
    before, after = normalized_vector(g), normalized_vector(h)
    assert after[u] > before[u] and after[v] > before[v]
    assert all(a >= b for a, b in zip(after, before))


@pytest.mark.parametrize("spec", [Cycle(7), Cycle(8), Prism(5), Prism(6), Crown(4), Crown(5)])
def test_vertex_transitive_families(spec):
    assert len(set(normalized_vector(generate(spec).graph))) == 1
