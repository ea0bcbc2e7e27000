"""Command-line front end.

    bbdehn [--json] analyze FILE [--subdisk-cap N] [--timing]
    bbdehn [--json] presentation FILE [--reduce] [--format plain|json]
    bbdehn [--json] stack --k K --l L --h H [--sweep]

Exit codes: 0 on success, 2 on input errors, 3 when a precondition fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify, explain
from .flag import build_flag_complex
from .graph import GraphError, read_graph
from .presentation import DisconnectedComplex, dicks_leary_presentation, export, spanning_tree_reduction
from .report import build_report
from .stacks import StackParams, sweep, verify_cubic_bound
from .structure import DEFAULT_SUBDISK_CAP

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


def _load(path):
    try:
        return read_graph(path)
    except GraphError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return None


def cmd_analyze(args) -> int:
    g = _load(args.file)
    if g is None:
        return EXIT_INPUT
    if args.json:
        report = build_report(g, source=args.file, subdisk_cap=args.subdisk_cap, timing=args.timing)
        print(json.dumps(report, indent=2))
        return EXIT_OK
    t0 = time.perf_counter()
    fv = build_flag_complex(g).f_vector
    verdict = classify(g, subdisk_cap=args.subdisk_cap)
    print(f"{args.file}: {len(g)} vertices, {g.edge_count} edges, f-vector {fv}")
    print(explain(verdict))
    if args.timing:
        print(f"time {time.perf_counter() - t0:.3f}s")
    return EXIT_OK


def cmd_presentation(args) -> int:
    g = _load(args.file)
    if g is None:
        return EXIT_INPUT
    try:
        p = dicks_leary_presentation(g)
    except DisconnectedComplex as exc:
        print(f"error: {exc}; the Bestvina-Brady group is not finitely generated", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.reduce:
        p = spanning_tree_reduction(p, g)
    fmt = "json" if args.json else args.format
    print(export(p, fmt))
    return EXIT_OK


def _row_out(rows, as_json):
    if as_json:
        print(json.dumps([{"k": k, "l": l, "h": h, "area": a, "bound": b, "ok": ok}
                          for k, l, h, a, b, ok in rows]))
        return
    print("k\tl\th\tarea\tbound\tok")
    for k, l, h, a, b, ok in rows:
        print(f"{k}\t{l}\t{h}\t{a}\t{b}\t{'true' if ok else 'false'}")


def cmd_stack(args) -> int:
    if args.sweep:
        _row_out(sweep(), args.json)
        return EXIT_OK
    if args.k is None or args.l is None or args.h is None:
        print("error: --k, --l and --h are required without --sweep", file=sys.stderr)
        return EXIT_INPUT
    try:
        p = StackParams(args.k, args.l, args.h)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    area, bound, ok = verify_cubic_bound(p)
    _row_out([(p.k, p.l, p.h, area, bound, ok)], args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(prog="bbdehn", parents=[common],
                                     description="Dehn functions of Bestvina-Brady groups from their defining graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="classify a graph file")
    a.add_argument("file")
    a.add_argument("--subdisk-cap", type=int, default=DEFAULT_SUBDISK_CAP)
    a.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical output)")
    a.set_defaults(func=cmd_analyze)

    p = sub.add_parser("presentation", parents=[common], help="print the Dicks-Leary presentation")
    p.add_argument("file")
    p.add_argument("--reduce", action="store_true", help="eliminate non-tree generators")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_presentation)

    s = sub.add_parser("stack", parents=[common], help="worst-case stack area against the cubic bound")
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--sweep", action="store_true", help="k 3..6, l 0..50, h 1..200")
    s.set_defaults(func=cmd_stack)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    if args.command == "analyze" and args.subdisk_cap < 4:
        parser.error("--subdisk-cap must be at least 4")
    return args.func(args)


def entry() -> None:
    sys.exit(main())
