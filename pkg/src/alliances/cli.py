"""Command-line front end.

Graph arguments accept a file (JSON graph format, or graph6) or a built-in
name: ``truncated_cube``, ``g12``, ``family:n`` (``cycle:4``, ``sun:3``),
shorthands ``C4 K1 P2 E3 S3`` (any case), or ``g6:<graph6>``. A missing file
whose stem is a built-in name (``k1.json``) resolves to the built-in.

Exit codes: 0 success, 1 witness failure, 2 usage or validation error,
3 solver size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import alliance
from .bounds import THEOREMS, WitnessError, evaluate, verified
from .generators import FAMILIES, enumerate_graphs, generate
from .graph import Graph, GraphError, VertexSet, graph_from_json, graph_to_json
from .graph6 import emit_graph6, parse_graph6
from .products import KINDS, ProductError, build
from .sweep import NamedGraph, SweepSpec, rows_to_csv, rows_to_json, run_sweep

_SHORT = re.compile(r"^([pckesPCKES])(\d+)$")


class UsageError(Exception):
    pass


def resolve_graph(ref: str) -> tuple[Graph, VertexSet | None]:
    path = Path(ref)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            return graph_from_json(text)
        return parse_graph6(text.splitlines()[0]), None
    if ref.startswith("g6:"):
        return parse_graph6(ref[3:]), None
    name = path.stem if path.suffix in (".json", ".g6") and "/" not in ref else ref
    m = _SHORT.match(name)
    if m:
        return generate(m.group(1).upper(), int(m.group(2)))
    if ":" in name:
        family, _, params = name.partition(":")
        return generate(family, *(int(p) for p in params.split(",") if p))
    if name in FAMILIES:
        return generate(name)
    raise GraphError(f"no such file or built-in graph: {ref!r}")


def _ids(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--set expects comma-separated vertex ids, got {text!r}") from None


def parse_k_range(text: str) -> list[int]:
    """``a:b`` (inclusive) or a comma list."""
    try:
        if ":" in text:
            lo, _, hi = text.partition(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad k range {text!r}") from None


def expand_graphs(refs: Sequence[str]) -> list[NamedGraph]:
    """Graph refs plus ``connected:N`` / ``all:N`` (every graph of order 1..N, up to isomorphism)."""
    out: list[NamedGraph] = []
    for ref in refs:
        kind, _, bound = ref.partition(":")
        if kind in ("connected", "all") and bound.isdigit():
            for n in range(1, int(bound) + 1):
                for g in enumerate_graphs(n, connected=kind == "connected"):
                    out.append(NamedGraph("g6:" + emit_graph6(g), g))
        else:
            g, s = resolve_graph(ref)
            out.append(NamedGraph(ref, g, s))
    return out


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
    else:
        print(text)


def cmd_gen(args: argparse.Namespace) -> int:
    graph, distinguished = generate(args.family, *args.params)
    text = emit_graph6(graph) if args.format == "graph6" else graph_to_json(graph, distinguished)
    _write(text, args.out)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    left, left_set = resolve_graph(args.left)
    right, _ = resolve_graph(args.right)
    u = _ids(args.set)
    if args.kind == "hierarchical":
        if u is None and left_set is None:
            raise UsageError("hierarchical products need --set")
        u = u if u is not None else left_set.sorted()
    product = build(args.kind, left, right, u)
    _write(product.to_json(), args.out)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    graph, _ = resolve_graph(args.graph)
    if args.kind in ("dka", "gdka") and args.k is None:
        raise UsageError(f"solve {args.kind} needs -k")
    if args.kind == "pcode":
        code = alliance.find_1_perfect_code(graph)
        if args.json:
            print(json.dumps({"code": None if code is None else code.sorted()}))
        else:
            print("none" if code is None else " ".join(map(str, code)))
        return 0
    if args.kind == "gamma":
        result = alliance.domination_number(graph, workers=args.workers)
    elif args.kind == "gdka":
        result = alliance.gdka_number(graph, args.k, workers=args.workers)
    else:
        result = alliance.dka_number(graph, args.k, workers=args.workers)
    if args.json:
        print(json.dumps(result.to_dict()))
        return 0
    print(result.value)
    if args.witness and result.witness is not None:
        print("witness: " + " ".join(map(str, result.witness)))
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    left, left_set = resolve_graph(args.left)
    right, _ = resolve_graph(args.right)
    u = _ids(args.set)
    if args.theorem == "hier" and u is None:
        if left_set is None:
            raise UsageError("the hier bound needs --set")
        u = left_set.sorted()
    report = evaluate(args.theorem, left, right, args.k, u=u)
    if args.verify:
        report = verified(report, max_n=args.max_n)
    print(json.dumps(report.to_dict()))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    ks = parse_k_range(args.k)
    if not ks:
        raise UsageError("k range is empty")
    spec = SweepSpec(
        lefts=expand_graphs(args.left),
        rights=expand_graphs(args.right),
        ks=ks,
        theorems=args.theorems or list(THEOREMS),
        max_n=args.max_n if args.max_n is not None else _env_cap(),
        skip_exact=args.skip_exact,
        workers=args.workers,
        hier_set=_ids(args.set),
    )
    rows = run_sweep(spec)
    _write(rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows), args.out)
    bad = sum(r.violation for r in rows)
    print(f"{len(rows)} applicable cells, {bad} violations", file=sys.stderr)
    return 0


def _env_cap() -> int:
    import os

    return int(os.environ.get("ALLIANCE_MAX_N", 24))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alliances", description="Global defensive k-alliances in graph products.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "json"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--set", help="U for hierarchical products, e.g. 8,9,10,11")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("solve", help="exact alliance / domination numbers")
    p.add_argument("kind", choices=("gamma", "dka", "gdka", "pcode"))
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bound", help="evaluate one theorem's bound")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--set")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="evaluate bounds over a grid, CSV/JSON output")
    p.add_argument("--theorems", nargs="+", choices=THEOREMS)
    p.add_argument("--left", nargs="+", required=True, help="graph refs, or connected:N / all:N")
    p.add_argument("--right", nargs="+", required=True)
    p.add_argument("-k", "--k", required=True, help="a:b inclusive or comma list")
    p.add_argument("--set", help="U for the hier theorem (default: distinguished set or even ids)")
    p.add_argument("--max-n", type=int, help="exact-verification cap (default $ALLIANCE_MAX_N or 24)")
    p.add_argument("--skip-exact", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return ap


def _glue_negative_k(argv: list[str]) -> list[str]:
    # argparse takes "-1:1" for an option; attach it to the flag instead
    out: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in ("-k", "--k") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(("-k" if arg == "-k" else "--k=") + argv[i + 1])
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_k(argv))
    try:
        return args.func(args)
    except alliance.SolverCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WitnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, GraphError, ProductError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
