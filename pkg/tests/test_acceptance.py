"""Exit criteria for the package, one test per criterion."""

import contextlib
import io
import time
from fractions import Fraction

from harmonic_families.cli import main
from harmonic_families.families import (
    Book,
    CompleteBipartite,
    Crown,
    Cycle,
    Family,
    Ladder,
    Path,
    generate,
)
from harmonic_families.formats import render_json
from harmonic_families.graph import complete_graph
from harmonic_families.harmonic import centrality_report, harmonic_number, normalized_harmonic, normalized_vector
from harmonic_families.verify import (
    DEFAULT_RANGES,
    check_random_properties,
    errata_report,
    family_instances,
    isomorphic,
    random_corpus,
    sweep_all,
)

from conftest import CATERPILLAR_U, record_criterion

# 59 path + 58 cycle + 58 fan + 57 wheel + 30*30 kbipartite + 59 ladder
# + 38 crown + 58 prism + 59 star + 60 book + 58 helm
SWEEP_INSTANCES = 1464


def test_criterion_1_figure_caterpillar(caterpillar):
    value = normalized_harmonic(caterpillar, CATERPILLAR_U)
    timings = []
    for _ in range(5):
        start = time.perf_counter()
        normalized_harmonic(caterpillar, CATERPILLAR_U)
        timings.append(time.perf_counter() - start)
    best = min(timings)
    ok = value == Fraction(2, 3) and best < 1e-3
    record_criterion(1, ok, f"H(u) = {value}, {best * 1e6:.0f} us")
    assert ok


def test_criterion_2_formula_oracle_sweeps():
    start = time.perf_counter()
    reports = sweep_all()
    elapsed = time.perf_counter() - start
    mismatches = sum(len(r.mismatches) for r in reports)
    asym = sum(len(r.asymmetric_roles) for r in reports)
    ranges_ok = all(
        (r.m_range, r.n_range) == (DEFAULT_RANGES[r.family], DEFAULT_RANGES[r.family] if r.family is Family.COMPLETE_BIPARTITE else None)
        for r in reports
    )
    instances = sum(r.instances_checked for r in reports)
    vertices = sum(r.vertices_checked for r in reports)
    ok = (
        mismatches == 0
        and asym == 0
        and ranges_ok
        and instances == SWEEP_INSTANCES
        and elapsed < 30
    )
    record_criterion(
        2, ok, f"{instances} instances, {vertices} vertices, {mismatches} mismatches, {elapsed:.1f} s"
    )
    for r in reports:
        assert r.mismatches == [], [str(m) for m in r.mismatches]
    assert ok


def test_criterion_3_isomorphism_cross_checks():
    c6, c4 = generate(Cycle(6)).graph, generate(Cycle(4)).graph
    pairs = [
        (generate(Crown(3)).graph, c6, Fraction(2, 3)),
        (generate(Ladder(2)).graph, c4, Fraction(5, 6)),
        (generate(Book(1)).graph, c4, Fraction(5, 6)),
        (generate(CompleteBipartite(2, 2)).graph, c4, Fraction(5, 6)),
    ]
    ok = True
    for a, b, value in pairs:
        ok &= isomorphic(a, b)
        ok &= set(normalized_vector(a)) == set(normalized_vector(b)) == {value}
    record_criterion(3, ok, "Cr_3~C_6 at 2/3; L_2, B_1, K_2,2 ~ C_4 at 5/6")
    assert ok


def test_criterion_4_random_graph_properties():
    start = time.perf_counter()
    corpus = random_corpus(500)
    report = check_random_properties(corpus)
    elapsed = time.perf_counter() - start
    probs = {s.edge_probability for s in corpus}
    ok = (
        report.passed
        and report.graphs_checked == 500
        and report.disconnected > 0
        and report.isolated_vertices > 0
        and probs == {Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(9, 10)}
        and all(2 <= s.order <= 100 for s in corpus)
        and elapsed < 60
    )
    record_criterion(
        4,
        ok,
        f"{report.graphs_checked} graphs, {report.disconnected} disconnected, "
        f"{report.isolated_vertices} isolated vertices, {len(report.failures)} failures, {elapsed:.1f} s",
    )
    assert ok, report.failures


def test_criterion_5_complete_graphs():
    ok = True
    for m in range(2, 21):
        k = complete_graph(m)
        ok &= normalized_vector(k) == [1] * m
        for u, v in k.edges:
            below = [h for h in normalized_vector(k.without_edge(u, v)) if h < 1]
            ok &= len(below) == 2
    record_criterion(5, ok, "K_2..K_20 all ones; every single-edge deletion drops exactly 2 vertices")
    assert ok


def test_criterion_6_path_errata():
    stated_ok = proof_bad = 0
    for m in range(2, 61):
        endpoint = normalized_vector(generate(Path(m)).graph)[0]
        stated_ok += harmonic_number(m - 1) / (m - 1) == endpoint
        proof_bad += harmonic_number(m) / (m - 1) != endpoint
    record = next(e for e in errata_report() if e.key == "path-endpoint-proof-conclusion")
    ok = stated_ok == 59 and proof_bad == 59 and record.confirmed and record.cases_checked == 59
    record_criterion(6, ok, f"stated form {stated_ok}/59 match, H_m form {proof_bad}/59 mismatch")
    assert ok


def _cli(argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_criterion_7_cli_round_trip(tmp_path):
    checked = differing = 0
    for family in Family:
        for spec in family_instances(family, DEFAULT_RANGES[family]):
            path = tmp_path / "g.txt"
            code, _ = _cli(["generate", str(spec), "-o", str(path)])
            assert code == 0
            code, from_file = _cli(["compute", str(path), "--format", "json"])
            assert code == 0
            lg = generate(spec)
            in_process = render_json(centrality_report(lg.graph), lg)
            checked += 1
            differing += from_file != in_process
    ok = differing == 0 and checked == SWEEP_INSTANCES
    record_criterion(7, ok, f"{checked} instances, {differing} JSON differences")
    assert ok
