"""Colouring files and report rendering.

Colouring file::

    graph6 <string>
    u v R
    u v B
    ...

one line per edge in canonical order. Colours beyond red and blue (from
the search oracle) are written as integers.
"""

from __future__ import annotations

import json

from .graph import Graph, canonical_edge, parse_graph6, write_graph6
from .symmetry import BLUE, RED, EdgeColouring

_LETTERS = {RED: "R", BLUE: "B"}
_FROM_LETTER = {"R": RED, "B": BLUE}


class ColouringFileError(ValueError):
    pass


def format_colouring(c: EdgeColouring) -> str:
    lines = [f"graph6 {write_graph6(c.graph)}"]
    for (u, v), col in zip(c.graph.edges, c.colours):
        lines.append(f"{u} {v} {_LETTERS.get(col, str(col))}")
    return "\n".join(lines) + "\n"


def parse_colouring(text: str, g: Graph | None = None) -> EdgeColouring:
    """Parse a colouring file; when ``g`` is given the embedded graph must match it."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("graph6 "):
        raise ColouringFileError("colouring file must start with 'graph6 <string>'")
    embedded = parse_graph6(lines[0].split(None, 1)[1])
    if g is None:
        g = embedded
    elif embedded != g:
        raise ColouringFileError("colouring file describes a different graph")
    cols: dict[tuple[int, int], int] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ColouringFileError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        e = canonical_edge(u, v)
        if e not in g.edge_index:
            raise ColouringFileError(f"edge {u} {v} not in graph")
        if e in cols:
            raise ColouringFileError(f"edge {u} {v} listed twice")
        tok = parts[2].upper()
        cols[e] = _FROM_LETTER[tok] if tok in _FROM_LETTER else int(tok)
    missing = [e for e in g.edges if e not in cols]
    if missing:
        raise ColouringFileError(f"incomplete colouring: {len(missing)} edge(s) missing, first {missing[0]}")
    return EdgeColouring(g, tuple(cols[e] for e in g.edges))


def report_dict(report, g: Graph) -> dict:
    c = report.colouring
    out = {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "method": report.method,
        "verified": report.verified,
        "group_order": report.group_order,
        "root": report.root,
        "blue_edges": [list(e) for e in c.edges_of(BLUE)],
        "fallback_reason": report.fallback_reason,
        "finalize": report.finalize,
        "trace": report.trace,
    }
    return _plain(out)


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def render_report(d: dict) -> str:
    """Human-readable key/value form with one trace line per processed orbit."""
    lines = []
    for key in ("graph6", "n", "m", "method", "verified", "group_order", "root"):
        if d.get(key) is not None:
            lines.append(f"{key}: {d[key]}")
    lines.append("blue_edges: " + " ".join(f"{u}-{v}" for u, v in d["blue_edges"]))
    if d.get("fallback_reason"):
        lines.append(f"fallback_reason: {d['fallback_reason']}")
    if d.get("finalize"):
        lines.append("finalize: " + ", ".join(f"{k}={v}" for k, v in sorted(d["finalize"].items())))
    if d.get("trace"):
        lines.append("trace:")
        for rec in d["trace"]:
            bits = [f"orbit={rec.get('orbit')}"]
            for key in ("profile", "component_kind", "labels", "label_mode", "repair"):
                if key in rec:
                    bits.append(f"{key}={rec[key]}")
            lines.append("  - " + " ".join(str(b) for b in bits))
    return "\n".join(lines) + "\n"
