"""Edge-list documents, report serialization and DOT export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import GraphError, ParseError, SelfLoop
from .families import FamilySpec, LabeledGraph, format_family_spec, generate, parse_family_spec
from .graph import Graph, format_rational
from .harmonic import CentralityReport

FAMILY_TAG = "# family:"


@dataclass
class EdgeListDocument:
    graph: Graph
    declared_order: int | None = None
    family: FamilySpec | None = None
    comments: list[str] = field(default_factory=list)


def read_edge_list(text: str) -> EdgeListDocument:
    """Parse an edge-list document.

    Blank lines are skipped, ``#`` lines are comments, an optional
    ``order N`` header may precede the edges, and every other line is
    ``u v``. Without a header the order is ``1 + max id``.
    """
    declared: int | None = None
    family: FamilySpec | None = None
    comments: list[str] = []
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line)
            if line.startswith(FAMILY_TAG) and family is None:
                try:
                    family = parse_family_spec(line[len(FAMILY_TAG):].strip())
                except ValueError:
                    family = None
            continue
        fields = line.split()
        if fields[0] == "order":
            if declared is not None or edges:
                raise ParseError("'order' header must appear once, before any edge", lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"malformed order header {line!r}", lineno)
            declared = int(fields[1])
            if declared < 1:
                raise ParseError("order must be >= 1", lineno)
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"expected 'u v' with non-negative integers, got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise SelfLoop(u, lineno)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} out of range for order {declared}", lineno)
        edges.append((u, v))
        lines.append(lineno)
    if declared is None:
        if not edges:
            raise ParseError("document has neither an order header nor any edge")
        order = 1 + max(max(e) for e in edges)
    else:
        order = declared
    try:
        graph = Graph(order, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return EdgeListDocument(graph, declared, family, comments)


def parse_edge_list(text: str) -> Graph:
    return read_edge_list(text).graph


def attach_family(doc: EdgeListDocument) -> LabeledGraph | None:
    """Labels and roles for a document whose header names a family.

    Only honoured when the edges reproduce that family's canonical graph.
    """
    if doc.family is None:
        return None
    lg = generate(doc.family)
    return lg if lg.graph == doc.graph else None


def format_edge_list(graph: Graph, labeled: LabeledGraph | None = None) -> str:
    out = []
    if labeled is not None:
        out.append(f"{FAMILY_TAG} {format_family_spec(labeled.spec)}")
        out.append(f"# vertices {graph.order}, edges {graph.size}")
        out.append("# id label role")
        for v in graph.vertices():
            out.append(f"# {v} {labeled.labels[v]} {labeled.roles[v]}")
    out.append(f"order {graph.order}")
    out.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(out) + "\n"


def to_dot(graph: Graph, labeled: LabeledGraph | None = None) -> str:
    name = format_family_spec(labeled.spec) if labeled is not None else "G"
    out = [f'graph "{name}" {{']
    for v in graph.vertices():
        label = labeled.labels[v] if labeled is not None else str(v)
        out.append(f'  {v} [label="{label}"];')
    out.extend(f"  {u} -- {v};" for u, v in graph.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def decimal_string(q: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def report_rows(
    report: CentralityReport, labeled: LabeledGraph | None = None, include_raw: bool = False
) -> list[dict]:
    rows = []
    for cv in report.values:
        row = {
            "id": cv.vertex,
            "label": labeled.labels[cv.vertex] if labeled is not None else str(cv.vertex),
            "role": str(labeled.roles[cv.vertex]) if labeled is not None else None,
        }
        if include_raw:
            row["raw"] = format_rational(cv.raw)
        row["normalized"] = format_rational(cv.normalized)
        row["decimal"] = decimal_string(cv.normalized)
        rows.append(row)
    return rows


def report_document(
    report: CentralityReport, labeled: LabeledGraph | None = None, include_raw: bool = False
) -> dict:
    doc: dict = {"order": report.order}
    if labeled is not None:
        doc["family"] = format_family_spec(labeled.spec)
    doc["values"] = report_rows(report, labeled, include_raw)
    doc["ranking"] = list(report.ranking)
    return doc


def render_json(report, labeled=None, include_raw=False) -> str:
    return json.dumps(report_document(report, labeled, include_raw), indent=2) + "\n"


def render_csv(report, labeled=None, include_raw=False) -> str:
    rows = report_rows(report, labeled, include_raw)
    columns = ["id", "label", "role"] + (["raw"] if include_raw else []) + ["normalized", "decimal"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row[k] is None else row[k]) for k in columns})
    return buf.getvalue()


def render_text(report, labeled=None, include_raw=False) -> str:
    rows = report_rows(report, labeled, include_raw)
    columns = ["id", "label", "role"] + (["raw"] if include_raw else []) + ["normalized", "decimal"]
    cells = [[("-" if r[c] is None else str(r[c])) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(columns)]
    head = f"order {report.order}"
    if labeled is not None:
        head += f"  family {format_family_spec(labeled.spec)}"
    out = [head, "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    out.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    out.append("ranking " + " ".join(str(v) for v in report.ranking))
    return "\n".join(out) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}
