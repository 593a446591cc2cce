"""Rendering of check reports, operation tables and Hasse diagrams"""

import json
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..models.schemas import Carrier, CheckReport, ReportDocument, ReportEntry
from .nmv import NmvAlgebra, SectionFamily
from .tables import FiniteBinaryOp, FiniteUnaryOp, PartialOrder

VERDICT_MARKS = {"pass": "PASS", "fail": "FAIL", "n/a": "N/A "}


def to_report_document(report: CheckReport, carrier: Carrier) -> ReportDocument:
    """Report with witnesses given as element labels"""
    entries = []
    for result in report.results:
        witness = None
        if result.verdict == "fail":
            witness = list(carrier.labels(result.witness or ()))
        entries.append(ReportEntry(
            law_id=result.law_id,
            name=result.name,
            reference=result.reference,
            verdict=result.verdict,
            witness=witness,
        ))
    return ReportDocument(subject=report.subject, passed=report.passed, entries=entries)


def render_report(doc: ReportDocument) -> str:
    width = max((len(e.law_id) for e in doc.entries), default=0)
    lines = [f"{doc.subject}:"]
    for entry in doc.entries:
        line = f"  {VERDICT_MARKS[entry.verdict]}  {entry.law_id.ljust(width)}  {entry.name}"
        if entry.witness is not None:
            line += f"  witness ({', '.join(entry.witness)})"
        lines.append(line)
    failed = sum(1 for e in doc.entries if e.verdict == "fail")
    if failed:
        lines.append(f"{failed} of {len(doc.entries)} law(s) failed")
    else:
        lines.append(f"all {len(doc.entries)} law(s) hold")
    return "\n".join(lines)


def render_report_json(doc: ReportDocument) -> str:
    return doc.model_dump_json(indent=2)


def _grid(title: str, header: Sequence[str], rows: Sequence[Tuple[str, Sequence[str]]]) -> str:
    width = max([len(title)] + [len(h) for h in header] + [len(c) for _, row in rows for c in row]
                + [len(label) for label, _ in rows])
    lines = [" ".join([title.rjust(width), "|"] + [h.rjust(width) for h in header])]
    lines.append("-" * len(lines[0]))
    for label, row in rows:
        lines.append(" ".join([label.rjust(width), "|"] + [c.rjust(width) for c in row]))
    return "\n".join(lines)


def render_binary(symbol: str, op: FiniteBinaryOp, carrier: Carrier) -> str:
    rows = [(carrier.label(x), carrier.labels(row)) for x, row in enumerate(op.tolist())]
    return _grid(symbol, carrier.names, rows)


def render_unary(symbol: str, op: FiniteUnaryOp, carrier: Carrier) -> str:
    return _grid("x", carrier.names, [(symbol, carrier.labels(op.tolist()))])


def render_sections(sections: SectionFamily, carrier: Carrier) -> str:
    """x^a per section; entries outside [a, 1] are left as '.'"""
    rows = []
    for a, row in enumerate(sections.rows()):
        cells = ["." if image is None else carrier.label(image) for image in row]
        rows.append((carrier.label(a), cells))
    return _grid("^a", carrier.names, rows)


DERIVED_SYMBOLS = {"to": "→", "sqcup": "⊔", "otimes": "⊗", "sqcap": "⊓"}
DERIVED_ATTRS = {"to": "imp", "sqcup": "sqcup", "otimes": "otimes", "sqcap": "sqcap"}


def derived_tables(alg: NmvAlgebra, ops: Sequence[str]) -> Dict[str, List]:
    """Label tables of the requested term operations; 'sections' maps to rows
    with None outside each section"""
    c = alg.carrier
    tables = {}
    for name in ops:
        if name == "sections":
            tables[name] = [[None if v is None else c.label(v) for v in row]
                            for row in alg.sections.rows()]
        else:
            op = getattr(alg.derived, DERIVED_ATTRS[name])
            tables[name] = [list(c.labels(row)) for row in op.tolist()]
    return tables


def render_derived(alg: NmvAlgebra, ops: Sequence[str]) -> str:
    blocks = []
    for name in ops:
        if name == "sections":
            blocks.append(render_sections(alg.sections, alg.carrier))
        else:
            op = getattr(alg.derived, DERIVED_ATTRS[name])
            blocks.append(render_binary(DERIVED_SYMBOLS[name], op, alg.carrier))
    return "\n\n".join(blocks)


def render_derived_json(alg: NmvAlgebra, ops: Sequence[str]) -> str:
    return json.dumps({"elements": list(alg.carrier.names), "tables": derived_tables(alg, ops)},
                      indent=2, ensure_ascii=False)


def covering_pairs(order: PartialOrder) -> List[Tuple[int, int]]:
    """Edges (lower, upper) of the Hasse diagram, sorted by index"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(order.size))
    graph.add_edges_from((x, y) for x, y in order.pairs() if x != y)
    return sorted(nx.transitive_reduction(graph).edges())


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(order: PartialOrder, labels: Sequence[str], name: Optional[str] = "hasse") -> str:
    """Graphviz source for the Hasse diagram, bottom to top"""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, label in enumerate(labels):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for x, y in covering_pairs(order):
        lines.append(f"  n{x} -> n{y} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
