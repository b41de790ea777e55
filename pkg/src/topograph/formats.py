"""Text serializations: edge lists, DOT, JSON reports and verdict tables."""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Any, Callable, Sequence

from .claims import ClaimVerdict, summarize
from .core import SimpleGraph, TopoGraph, to_simple
from .invariants import InvariantReport

_HEADER = re.compile(r"#\s*(topograph|graph)\b(.*)")


def topo_edge_list(T: TopoGraph) -> str:
    G = to_simple(T)
    lines = [f"# topograph n={T.n} order={T.order} size={G.size}"]
    lines += [f"{u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def graph_edge_list(G: SimpleGraph, **meta: Any) -> str:
    extra = "".join(f" {k}={v}" for k, v in meta.items())
    lines = [f"# graph{extra} order={G.order} size={G.size}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SimpleGraph:
    """Inverse of :func:`topo_edge_list` and :func:`graph_edge_list`.

    Topograph files use masks as vertex ids, plain graph files use indices.
    The header's ``order`` keeps isolated vertices.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge list")
    head = _HEADER.match(lines[0])
    if head is None:
        raise ValueError("edge list must start with a '# topograph' or '# graph' header")
    fields = dict(kv.split("=", 1) for kv in head.group(2).split() if "=" in kv)
    order = int(fields["order"])
    offset = 1 if head.group(1) == "topograph" else 0
    edges = []
    for ln in lines[1:]:
        if ln.startswith("#"):
            continue
        u, v = (int(tok) - offset for tok in ln.split())
        edges.append((u, v))
    return SimpleGraph.from_edges(order, edges)


def dot(G: SimpleGraph, name: str, ids: Callable[[int], int] = lambda v: v) -> str:
    out = [f"graph {name} {{"]
    for v in range(G.order):
        label = G.label(v).replace('"', '\\"')
        out.append(f'  {ids(v)} [label="{label}"];')
    for u, v in G.edges():
        out.append(f"  {ids(u)} -- {ids(v)};")
    out.append("}")
    return "\n".join(out) + "\n"


def topo_dot(T: TopoGraph) -> str:
    return dot(to_simple(T), f"G_tau_n{T.n}", ids=lambda v: v + 1)


def graph_json(G: SimpleGraph, ids: Callable[[int], int] = lambda v: v, **meta: Any) -> str:
    doc = dict(meta)
    doc.update({
        "order": G.order,
        "size": G.size,
        "vertices": [{"id": ids(v), "label": G.label(v)} for v in range(G.order)],
        "edges": [[ids(u), ids(v)] for u, v in G.edges()],
    })
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def report_dict(report: InvariantReport, n: int | None = None,
                ids: Callable[[int], int] = lambda v: v) -> dict:
    doc: dict[str, Any] = {}
    if n is not None:
        doc["n"] = n
    doc["order"] = report.order
    doc["size"] = report.size
    doc["invariants"] = {
        "min_degree": report.min_degree,
        "max_degree": report.max_degree,
        "clique_number": report.clique_number,
        "independence_number": report.independence_number,
        "domination_number": report.domination_number,
        "radius": report.radius,
        "diameter": report.diameter,
        "is_connected": report.is_connected,
        "component_count": report.component_count,
        "cut_vertices": [ids(v) for v in report.cut_vertices],
        "pendant_vertices": [ids(v) for v in report.pendant_vertices],
    }
    doc["witnesses"] = {k: [ids(v) for v in vs] for k, vs in report.witnesses.items()}
    doc["exact"] = dict(report.exact)
    return doc


def report_json(report: InvariantReport, n: int | None = None,
                ids: Callable[[int], int] = lambda v: v) -> str:
    return json.dumps(report_dict(report, n, ids), indent=2) + "\n"


def report_text(report: InvariantReport, n: int | None = None,
                label: Callable[[int], str] = str) -> str:
    lines = []
    if n is not None:
        lines.append(f"n: {n}")
    flag = {k: ("" if ok else " (inexact)") for k, ok in report.exact.items()}
    lines += [
        f"order: {report.order}",
        f"size: {report.size}",
        f"min_degree: {report.min_degree}",
        f"max_degree: {report.max_degree}",
        f"clique_number: {report.clique_number}{flag.get('clique_number', '')}",
        f"independence_number: {report.independence_number}{flag.get('independence_number', '')}",
        f"domination_number: {report.domination_number}{flag.get('domination_number', '')}",
        f"radius: {report.radius}",
        f"diameter: {report.diameter}",
        f"is_connected: {str(report.is_connected).lower()}",
        f"component_count: {report.component_count}",
        f"cut_vertices: {' '.join(label(v) for v in report.cut_vertices)}",
        f"pendant_vertices: {' '.join(label(v) for v in report.pendant_vertices)}",
    ]
    for k, vs in report.witnesses.items():
        lines.append(f"witness.{k}: {' '.join(label(v) for v in vs)}")
    return "\n".join(lines) + "\n"


def cell(value: Any) -> str:
    """Flat string form of a predicted/computed value for tables."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, dict):
        return ";".join(f"{k}={cell(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ";".join(cell(v) for v in value)
    return str(value)


def summary_line(verdicts: Sequence[ClaimVerdict]) -> str:
    return " ".join(f"{k}={v}" for k, v in summarize(list(verdicts)).items())


def verdicts_csv(verdicts: Sequence[ClaimVerdict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim", "params", "predicted", "computed", "verdict"])
    for v in verdicts:
        w.writerow([v.claim, v.params_text, cell(v.predicted), cell(v.computed), v.verdict])
    buf.write(f"# {summary_line(verdicts)}\n")
    return buf.getvalue()


def parse_verdicts_csv(text: str) -> list[dict[str, str]]:
    rows = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return list(csv.DictReader(rows))


def verdicts_json(verdicts: Sequence[ClaimVerdict]) -> str:
    doc = {
        "verdicts": [
            {
                "claim": v.claim,
                "params": v.params_dict(),
                "predicted": v.predicted,
                "computed": v.computed,
                "verdict": v.verdict,
                "evidence": v.evidence,
            }
            for v in verdicts
        ],
        "summary": summarize(list(verdicts)),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def verdicts_text(verdicts: Sequence[ClaimVerdict]) -> str:
    rows = [("claim", "params", "predicted", "computed", "verdict")]
    rows += [(v.claim, v.params_text, cell(v.predicted), cell(v.computed), v.verdict) for v in verdicts]
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.append(summary_line(verdicts))
    return "\n".join(lines) + "\n"
