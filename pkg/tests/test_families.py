from collections import Counter

import pytest
from hypothesis import given, strategies as st

from harmonic_families.closed_forms import vertex_role
from harmonic_families.errors import InvalidFamilyParameter, ParseError
from harmonic_families.families import (
    MINIMUM_M,
    Book,
    CompleteBipartite,
    Crown,
    Cycle,
    Family,
    FamilySpec,
    Helm,
    Ladder,
    Path,
    Prism,
    RoleKind,
    Wheel,
    edge_count,
    format_family_spec,
    generate,
    parse_family_spec,
)
from harmonic_families.graph import is_connected
from harmonic_families.verify import isomorphic

EXPECTED_ORDER = {
    Family.PATH: lambda m, n: m,
    Family.CYCLE: lambda m, n: m,
    Family.FAN: lambda m, n: m + 1,
    Family.WHEEL: lambda m, n: m + 1,
    Family.COMPLETE_BIPARTITE: lambda m, n: m + n,
    Family.LADDER: lambda m, n: 2 * m,
    Family.CROWN: lambda m, n: 2 * m,
    Family.PRISM: lambda m, n: 2 * m,
    Family.STAR: lambda m, n: m + 1,
    Family.BOOK: lambda m, n: 2 * (m + 1),
    Family.HELM: lambda m, n: 2 * m + 1,
}


@st.composite
def specs(draw, max_m: int = 14):
    family = draw(st.sampled_from(list(Family)))
    m = draw(st.integers(MINIMUM_M[family], max_m))
    n = draw(st.integers(1, 8)) if family is Family.COMPLETE_BIPARTITE else None
    return FamilySpec(family, m, n)


def test_cycle_3_is_triangle():
    g = generate(Cycle(3)).graph
    assert (g.order, g.size, g.degrees()) == (3, 3, [2, 2, 2])


def test_helm_3_degrees():
    lg = generate(Helm(3))
    g = lg.graph
    assert g.order == 7 and g.size == 9
    assert g.degrees() == [3, 4, 4, 4, 1, 1, 1]


def test_crown_3_is_hexagon():
    g = generate(Crown(3)).graph
    assert g.order == 6 and g.size == 6
    assert set(g.degrees()) == {2} and is_connected(g)
    assert isomorphic(g, generate(Cycle(6)).graph)


@pytest.mark.parametrize("spec, count", [(Path(5), 4), (Prism(3), 9), (Book(2), 7)])
def test_edge_count_examples(spec, count):
    assert edge_count(spec) == count
    assert generate(spec).graph.size == count


@pytest.mark.parametrize(
    "family, m, n",
    [
        (Family.PATH, 1, None),
        (Family.CYCLE, 2, None),
        (Family.FAN, 2, None),
        (Family.WHEEL, 3, None),
        (Family.COMPLETE_BIPARTITE, 0, 2),
        (Family.COMPLETE_BIPARTITE, 2, 0),
        (Family.LADDER, 1, None),
        (Family.CROWN, 2, None),
        (Family.PRISM, 2, None),
        (Family.STAR, 1, None),
        (Family.BOOK, 0, None),
        (Family.HELM, 2, None),
    ],
)
def test_below_minimum_rejected(family, m, n):
    with pytest.raises(InvalidFamilyParameter) as info:
        FamilySpec(family, m, n)
    assert info.value.value < info.value.minimum


def test_error_names_bound():
    with pytest.raises(InvalidFamilyParameter, match="minimum m = 3"):
        Crown(2)


@given(specs())
def test_generated_graph_invariants(spec):
    lg = generate(spec)
    g = lg.graph
    assert g.order == EXPECTED_ORDER[spec.family](spec.m, spec.n)
    assert g.size == edge_count(spec)
    assert len(lg.roles) == len(lg.labels) == g.order
    assert len(set(lg.labels)) == g.order
    assert is_connected(g)
    for u in g.vertices():
        assert u not in g.neighbors(u)
        assert all(u in g.neighbors(v) for v in g.neighbors(u))


@given(specs())
def test_generator_roles_match_index_map(spec):
    lg = generate(spec)
    for v, role in enumerate(lg.roles):
        assert vertex_role(spec, v)[0] == role


def test_role_partition_sizes():
    counts = Counter(r.kind for r in generate(Wheel(7)).roles)
    assert counts == {RoleKind.HUB: 1, RoleKind.WHEEL_RIM: 7}
    counts = Counter(r.kind for r in generate(Helm(5)).roles)
    assert counts == {RoleKind.HELM_CENTER: 1, RoleKind.HELM_RIM: 5, RoleKind.HELM_PENDANT: 5}
    counts = Counter(r.kind for r in generate(CompleteBipartite(3, 4)).roles)
    assert counts == {RoleKind.PARTITION_U: 3, RoleKind.PARTITION_V: 4}
    counts = Counter(r.kind for r in generate(Book(4)).roles)
    assert counts == {RoleKind.BOOK_CENTER: 2, RoleKind.BOOK_PAGE: 8}


def test_canonical_index_maps():
    ladder = generate(Ladder(4))
    assert ladder.labels[5] == "u2v2"
    assert ladder.graph.neighbors(5) == {1, 4, 6}
    book = generate(Book(2))
    assert book.labels[:6] == ("u0v1", "u0v2", "u1v1", "u1v2", "u2v1", "u2v2")
    helm = generate(Helm(4))
    assert helm.labels[6] == "v2" and helm.graph.neighbors(6) == {2}
    kmn = generate(CompleteBipartite(2, 3))
    assert kmn.labels == ("u1", "u2", "v1", "v2", "v3")


@given(specs())
def test_spec_string_round_trip(spec):
    assert parse_family_spec(format_family_spec(spec)) == spec


@pytest.mark.parametrize("text", ["path", "path:", "path: 3", "kbipartite:3", "cycle:3,4", "tree:4", "PATH:3"])
def test_malformed_spec_strings(text):
    with pytest.raises(ParseError):
        parse_family_spec(text)


def test_out_of_range_spec_string():
    with pytest.raises(InvalidFamilyParameter):
        parse_family_spec("crown:2")
