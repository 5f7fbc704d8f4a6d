"""Command-line interface: ``harmonic-families {generate,compute,rank,verify}``.

Exit status: 0 success, 1 verification mismatch, 2 usage or parse error,
3 trivial (single-vertex) graph.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import verify
from .errors import GraphError, InvalidFamilyParameter, ParseError, TrivialGraph
from .families import Family, LabeledGraph, generate, parse_family_spec
from .formats import (
    RENDERERS,
    attach_family,
    decimal_string,
    format_edge_list,
    read_edge_list,
    to_dot,
)
from .graph import Graph, format_rational
from .harmonic import centrality_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TRIVIAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_input(source: str) -> tuple[Graph, LabeledGraph | None]:
    """An existing file is read as an edge list; anything else as a family spec."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            doc = read_edge_list(fh.read())
        return doc.graph, attach_family(doc)
    lg = generate(parse_family_spec(source))
    return lg.graph, lg


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_generate(args: argparse.Namespace) -> int:
    lg = generate(parse_family_spec(args.spec))
    text = to_dot(lg.graph, lg) if args.dot else format_edge_list(lg.graph, lg)
    _write(text, args.output)
    return EXIT_OK


def cmd_compute(args: argparse.Namespace) -> int:
    graph, lg = load_input(args.input)
    report = centrality_report(graph)
    sys.stdout.write(RENDERERS[args.format](report, lg, args.raw))
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    graph, lg = load_input(args.input)
    report = centrality_report(graph)
    k = report.order if args.top is None else args.top
    for rank, cv in enumerate(report.top(k), start=1):
        label = lg.labels[cv.vertex] if lg is not None else str(cv.vertex)
        sys.stdout.write(
            f"{rank} {cv.vertex} {label} {format_rational(cv.normalized)} "
            f"{decimal_string(cv.normalized)}\n"
        )
    return EXIT_OK


def _parse_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    lo, sep, hi = text.partition(":")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"range must be LO:HI, got {text!r}") from None
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return lo_i, hi_i


def _mismatch_json(mm: verify.Mismatch) -> dict:
    return {
        "spec": str(mm.spec),
        "vertex": mm.vertex,
        "formula": format_rational(mm.formula),
        "oracle": format_rational(mm.oracle),
    }


def cmd_verify(args: argparse.Namespace) -> int:
    m_range, n_range = _parse_range(args.m_range), _parse_range(args.n_range)
    if args.family == "all":
        if m_range or n_range:
            raise UsageError("--m-range/--n-range need a single family, not 'all'")
        families = list(Family)
    else:
        try:
            families = [Family(args.family)]
        except ValueError:
            raise UsageError(f"unknown family {args.family!r}") from None
    sweeps = [verify.sweep_family(f, m_range, n_range) for f in families]
    props = (
        verify.check_random_properties(verify.random_corpus(args.random, args.seed))
        if args.random
        else None
    )
    errata = verify.errata_report() if args.errata else []
    passed = all(s.passed for s in sweeps) and (props is None or props.passed)

    if args.format == "json":
        doc = {
            "sweeps": [
                {
                    "family": s.family.value,
                    "m_range": list(s.m_range),
                    "n_range": list(s.n_range) if s.n_range else None,
                    "instances": s.instances_checked,
                    "vertices": s.vertices_checked,
                    "mismatches": [_mismatch_json(mm) for mm in s.mismatches],
                    "asymmetric_roles": [[str(sp), r] for sp, r in s.asymmetric_roles],
                }
                for s in sweeps
            ],
            "random": None
            if props is None
            else {
                "graphs": props.graphs_checked,
                "disconnected": props.disconnected,
                "isolated_vertices": props.isolated_vertices,
                "failures": [[str(sp), why] for sp, why in props.failures],
            },
            "errata": [e.__dict__ for e in errata],
            "passed": passed,
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for s in sweeps:
            print(s.summary())
            for mm in s.mismatches:
                print(f"  MISMATCH {mm}")
            for sp, role in s.asymmetric_roles:
                print(f"  ASYMMETRIC {sp} role {role}")
        if props is not None:
            print(
                f"random: {props.graphs_checked} graphs ({props.disconnected} disconnected, "
                f"{props.isolated_vertices} isolated vertices), {len(props.failures)} failures"
            )
            for sp, why in props.failures:
                print(f"  FAIL {sp}: {why}")
        for e in errata:
            status = "confirmed" if e.confirmed else "NOT confirmed"
            print(f"erratum {e.key} [{status}]: {e.detail}")
        print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-families",
        description="Exact harmonic centrality for graph families and edge lists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family instance as an edge list")
    p.add_argument("spec", help="family spec, e.g. helm:3 or kbipartite:3,4")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead")
    p.set_defaults(func=cmd_generate)

    for name, func, text in (
        ("compute", cmd_compute, "compute harmonic centrality for every vertex"),
        ("rank", cmd_rank, "list vertices by descending centrality"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("input", help="edge-list file or family spec")
        if name == "compute":
            p.add_argument("--format", choices=sorted(RENDERERS), default="text")
            p.add_argument("--raw", action="store_true", help="include unnormalized sums")
        else:
            p.add_argument("--top", type=int, metavar="K")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check closed forms against the BFS oracle")
    p.add_argument("family", nargs="?", default="all", help="family name or 'all'")
    p.add_argument("--m-range", metavar="LO:HI")
    p.add_argument("--n-range", metavar="LO:HI", help="second parameter range for kbipartite")
    p.add_argument("--random", type=int, default=0, metavar="N", help="also check N random graphs")
    p.add_argument("--seed", type=int, default=20240101)
    p.add_argument("--errata", action="store_true", help="print the errata report")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except TrivialGraph as exc:
        print(f"error: trivial graph: {exc}", file=sys.stderr)
        return EXIT_TRIVIAL
    except (UsageError, ParseError, InvalidFamilyParameter, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
