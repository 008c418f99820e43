"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report carries the witness), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .arrays import conjecture_check, k_array, m_array
from .checks import TARGETS
from .diagrams import AlgebraElement, Category, algebra_mul, enumerate_category
from .export import (
    atomic_write,
    dimension_table_csv,
    graph_to_dot,
    graph_to_json,
    k_table_csv,
    m_table_csv,
    payload_label,
)
from .graphs import KINDS, build_graph, pascalize
from .report import jsonable
from .traces import ThomaParameter, TraceConvention, lifted_diagram_trace

BASE_CAP = 30
PASCAL_CAP = 20
ARRAY_CAP = 400


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r} (expected p/q)") from None


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def emit(text: str, out: str | None) -> None:
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, ensure_ascii=False) + "\n"


def _pick(positional, flag, name: str):
    if positional is not None and flag is not None and positional != flag:
        raise UsageError(f"{name} given twice with different values")
    return positional if positional is not None else flag


# -- graph / dims -------------------------------------------------------------

def _graph_from_args(kind: str | None, levels: int | None, pascal: bool):
    if kind is None:
        raise UsageError(f"missing graph kind; choose from {', '.join(KINDS)}")
    if kind not in KINDS:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    if levels is None:
        raise UsageError("missing level count (--levels N)")
    cap = PASCAL_CAP if pascal else BASE_CAP
    if not 0 <= levels <= cap:
        raise UsageError(f"levels must lie in 0..{cap} for {'pascalized' if pascal else 'base'} graphs")
    g = build_graph(kind, levels)
    return pascalize(g) if pascal else g


def _graph_text(g) -> str:
    lines = [f"{g.kind}: levels 0..{g.level_cap}"]
    for n in range(g.level_cap + 1):
        lines.append(f"level {n} ({len(g.level(n))} vertices)")
        for v in g.level(n):
            lines.append(f"  {payload_label(v.payload)}  dim={g.dim(v)}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    g = _graph_from_args(_pick(args.kind_pos, args.kind, "kind"), _pick(args.levels_pos, args.levels, "levels"),
                         args.pascalize)
    fmt = args.format or "json"
    if fmt == "json":
        text = json.dumps(graph_to_json(g), ensure_ascii=False) + "\n"
    elif fmt == "dot":
        text = graph_to_dot(g)
    elif fmt == "csv":
        text = dimension_table_csv(g)
    else:
        text = _graph_text(g)
    emit(text, args.out)
    return 0


def cmd_dims(args) -> int:
    kind = _pick(args.kind_pos, args.kind, "kind")
    levels = _pick(args.levels_pos, args.levels, "levels")
    fmt = args.format or "csv"
    if kind in ("M", "K"):
        if levels is None or not 0 <= levels <= ARRAY_CAP:
            raise UsageError(f"levels must lie in 0..{ARRAY_CAP} for the {kind} array")
        if fmt not in ("csv", "json"):
            raise UsageError("array tables support --format csv or json")
        if kind == "M":
            M = m_array(levels)
            text = m_table_csv(M) if fmt == "csv" else dumps(
                [{"n": n, "l": l, "M": M(n, l)} for n in range(levels + 1) for l in range(n + 1)])
        else:
            K = k_array(levels)
            text = k_table_csv(K) if fmt == "csv" else dumps(
                [{"n": n, "k": k, "l": l, "K": v} for n in range(levels + 1) for k, l, v in K.entries(n)])
        emit(text, args.out)
        return 0
    g = _graph_from_args(kind, levels, args.pascalize)
    if fmt == "csv":
        text = dimension_table_csv(g)
    elif fmt == "json":
        text = json.dumps(graph_to_json(g)["dims"], ensure_ascii=False) + "\n"
    elif fmt == "text":
        text = _graph_text(g)
    else:
        raise UsageError("dims supports --format csv, json or text")
    emit(text, args.out)
    return 0


# -- verify -------------------------------------------------------------------

def _read_checkpoint(path: str, N: int) -> int:
    if not os.path.exists(path):
        return 0
    data = load_json(path)
    if not isinstance(data, dict) or data.get("target") != "conjecture" or not isinstance(data.get("last_verified_n"), int):
        raise UsageError(f"{path}: not a conjecture checkpoint")
    return data["last_verified_n"]


def cmd_verify(args) -> int:
    target = args.target
    N = _pick(args.levels_pos, args.levels, "levels")
    if target not in TARGETS:
        raise UsageError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    fn, lo, hi = TARGETS[target]
    if N is None:
        raise UsageError("missing level count (--levels N)")
    if not lo <= N <= hi:
        raise UsageError(f"{target} accepts N in {lo}..{hi}")
    config = {"command": "verify", "target": target, "levels": N, "resume": args.resume}
    resumed_from = None
    start = time.perf_counter()
    if args.resume is not None:
        if target != "conjecture":
            raise UsageError("--resume is only supported for the conjecture sweep")
        last = _read_checkpoint(args.resume, N)
        resumed_from = last or None

        def checkpoint(n: int) -> None:
            atomic_write(args.resume, json.dumps({"target": "conjecture", "last_verified_n": n}) + "\n")

        report = conjecture_check(N, start=last + 1, on_level=checkpoint)
    else:
        report = fn(N)
    doc = {
        "tool": "easytraces",
        "version": __version__,
        "config": config,
        "duration_seconds": round(time.perf_counter() - start, 6),
        "report": report.to_dict(),
    }
    if resumed_from is not None:
        doc["resumed_after_n"] = resumed_from
    emit(dumps(doc), args.out)
    if args.out or args.format == "text":
        sys.stderr.write("\n".join(report.summary_lines()) + "\n")
    return 0 if report.holds else 1


# -- diagram calculator -------------------------------------------------------

def _element(path: str) -> AlgebraElement:
    try:
        return AlgebraElement.from_json(load_json(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _delta(args) -> Fraction | None:
    return None if args.delta is None else parse_rational(args.delta)


def cmd_mul(args) -> int:
    x, y = _element(args.x), _element(args.y)
    if x.k != y.k:
        raise UsageError(f"size mismatch: {args.x} has k={x.k}, {args.y} has k={y.k}")
    z = algebra_mul(x, y)
    delta = _delta(args)
    fmt = args.format or "json"
    if fmt not in ("json", "text"):
        raise UsageError("mul supports --format json or text")
    if delta is None:
        text = dumps(z.to_json()) if fmt == "json" else str(z) + "\n"
    else:
        values = z.evaluate(delta)
        if fmt == "json":
            text = dumps([{"diagram": d.to_json(), "value": v} for d, v in values.items()])
        else:
            text = (" + ".join(f"({v})·e{d}" for d, v in values.items()) or "0") + "\n"
    emit(text, args.out)
    return 0


def cmd_trace(args) -> int:
    x = _element(args.x)
    try:
        t = ThomaParameter.from_json(load_json(args.thoma))
        conv = TraceConvention.parse(args.convention)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        value = lifted_diagram_trace(t, conv, x, _delta(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if (args.format or "text") == "json":
        text = dumps({"convention": conv.value, "delta": args.delta, "trace": value})
    else:
        text = f"{value}\n"
    emit(text, args.out)
    return 0


def cmd_enumerate(args) -> int:
    try:
        cat = Category.parse(args.category or "S")
        k = _pick(args.levels_pos, args.levels, "levels")
        if k is None:
            raise UsageError("missing point count (--levels k)")
        diagrams = enumerate_category(cat, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.format or "json"
    if fmt == "json":
        text = dumps({"category": cat.value, "k": k, "count": len(diagrams), "diagrams": [d.to_json() for d in diagrams]})
    elif fmt == "text":
        text = "".join(f"{d}\n" for d in diagrams) + f"# {len(diagrams)} diagrams in {cat.value}({k},{k})\n"
    else:
        raise UsageError("enumerate-category supports --format json or text")
    emit(text, args.out)
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="easytraces", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"easytraces {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats)
        sp.add_argument("--out", metavar="PATH", help="write atomically to PATH instead of stdout")

    sp = sub.add_parser("graph", help="build a branching graph and export it with vertex dimensions")
    sp.add_argument("kind_pos", nargs="?", metavar="KIND")
    sp.add_argument("levels_pos", nargs="?", type=int, metavar="N")
    sp.add_argument("--kind")
    sp.add_argument("--levels", type=int)
    sp.add_argument("--pascalize", action="store_true")
    common(sp, ["json", "csv", "dot", "text"])
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("dims", help="dimension table of a graph, or the M / K arrays")
    sp.add_argument("kind_pos", nargs="?", metavar="KIND")
    sp.add_argument("levels_pos", nargs="?", type=int, metavar="N")
    sp.add_argument("--kind")
    sp.add_argument("--levels", type=int)
    sp.add_argument("--pascalize", action="store_true")
    common(sp, ["json", "csv", "text"])
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("verify", help="run an exact verification sweep")
    sp.add_argument("target", choices=sorted(TARGETS))
    sp.add_argument("levels_pos", nargs="?", type=int, metavar="N")
    sp.add_argument("--levels", type=int)
    sp.add_argument("--resume", metavar="PATH", help="checkpoint file for the conjecture sweep")
    common(sp, ["json", "text"])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mul", help="multiply two diagram-algebra elements")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--delta", metavar="p/q")
    common(sp, ["json", "text"])
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("trace", help="lifted Thoma trace of a diagram-algebra element")
    sp.add_argument("x")
    sp.add_argument("thoma")
    sp.add_argument("--convention", default="cycle-length", choices=[c.value for c in TraceConvention])
    sp.add_argument("--delta", metavar="p/q")
    common(sp, ["json", "text"])
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("enumerate-category", help="list the diagrams of a category in Part(k,k)")
    sp.add_argument("levels_pos", nargs="?", type=int, metavar="K")
    sp.add_argument("--category", metavar="C")
    sp.add_argument("--levels", type=int)
    common(sp, ["json", "text"])
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"easytraces: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
