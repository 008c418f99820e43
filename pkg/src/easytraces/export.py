"""JSON, DOT and CSV renderings of graphs and dimension tables."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from typing import Any

from .arrays import KArray, MArray
from .graphs import BranchingGraph, Tagged, Vertex
from .young import YoungDiagram


def payload_to_json(p: Any) -> Any:
    if isinstance(p, Vertex):
        return {"level": p.level, "payload": payload_to_json(p.payload)}
    if isinstance(p, Tagged):
        return {"diagram": list(p.diagram), "copy": p.copy}
    if isinstance(p, YoungDiagram):
        return list(p)
    if isinstance(p, tuple):
        return [payload_to_json(x) for x in p]
    raise TypeError(f"cannot serialize payload {p!r}")


def payload_label(p: Any) -> str:
    if isinstance(p, Vertex):
        return f"{p.level}:{payload_label(p.payload)}"
    if isinstance(p, Tagged):
        return f"{p.diagram}#{p.copy}"
    if isinstance(p, YoungDiagram):
        return str(p)
    if isinstance(p, tuple):
        return "(" + ", ".join(payload_label(x) for x in p) + ")"
    return str(p)


def graph_to_json(g: BranchingGraph, with_dims: bool = True) -> dict:
    out: dict = {
        "kind": g.kind,
        "level_cap": g.level_cap,
        "levels": [[payload_to_json(p) for p in g.payloads(n)] for n in range(g.level_cap + 1)],
        "edges": [
            [[u.level, payload_to_json(u.payload)], [v.level, payload_to_json(v.payload)], m]
            for u, v, m in g.edges()
        ],
    }
    if with_dims:
        out["dims"] = [[v.level, payload_to_json(v.payload), g.dim(v)] for v in g.vertices()]
    return out


def graph_to_dot(g: BranchingGraph, with_dims: bool = True) -> str:
    ids = {v: f"v{i}" for i, v in enumerate(g.vertices())}
    lines = [f'digraph "{g.kind}" {{', "  rankdir=TB;"]
    for n in range(g.level_cap + 1):
        row = []
        for v in g.level(n):
            label = f"{n}:{payload_label(v.payload)}"
            if with_dims:
                label += f"\\ndim={g.dim(v)}"
            lines.append(f'  {ids[v]} [label="{label}"];')
            row.append(ids[v])
        lines.append("  { rank=same; " + " ".join(row) + " }")
    for u, v, m in g.edges():
        attr = f' [label="{m}"]' if m != 1 else ""
        lines.append(f"  {ids[u]} -> {ids[v]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv(rows: list[list[Any]], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dimension_table_csv(g: BranchingGraph) -> str:
    """Columns level, payload, dim; payloads rendered as JSON."""
    rows = [[v.level, json.dumps(payload_to_json(v.payload), separators=(",", ":")), g.dim(v)] for v in g.vertices()]
    return _csv(rows, ["level", "payload", "dim"])


def m_table_csv(M: MArray) -> str:
    return _csv([[n, l, M(n, l)] for n in range(M.N + 1) for l in range(n + 1)], ["n", "l", "M"])


def k_table_csv(K: KArray) -> str:
    return _csv([[n, k, l, v] for n in range(K.N + 1) for k, l, v in K.entries(n)], ["n", "k", "l", "K"])


def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
