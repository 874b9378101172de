"""Command-line interface.

    nutkit check GRAPH [--witness]
    nutkit extend GRAPH --vertex V
    nutkit detect GRAPH
    nutkit generate -n N -d D [--girth G] [--nut-only] [--count-only]
    nutkit census -d D --orders A..B
    nutkit certify -d D [--strict | --trusting] [--out FILE]
    nutkit seeds [--validate] [-d D]
    nutkit vt GRAPH
    nutkit vt-pair -n N -d D

GRAPH is a file path, ``-`` for standard input, or the graph text itself;
text starting with ``{`` is read as an adjacency list, anything else as
graph6.  Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget
exceeded.  NUTKIT_WORKERS sets the default worker count.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from typing import Sequence

from . import __version__
from .catalog import DEFAULT_BUDGET, census, certify_N, load_seed_catalog
from .errors import (
    AdjListError,
    BudgetExceeded,
    ExclusionUnverified,
    Graph6Error,
    InvalidGraph,
    NutkitError,
    UsageError,
)
from .graph import Graph, parse_graph, to_graph6
from .nut import classify, fowler_detect, fowler_extend
from .regular import GenSpec, count, default_workers, is_admissible, write_graph6
from .symmetry import check_vt_conditions, is_vertex_transitive, vertex_orbits

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _read_graph(arg: str, fmt: str) -> Graph:
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    return parse_graph(text, fmt)


def _budget(value: str) -> float | None:
    try:
        b = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number of seconds: {value!r}")
    if b <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return None if math.isinf(b) else b


def _orders(value: str) -> range:
    lo, sep, hi = value.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {value!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty order range {value!r}")
    return range(a, b + 1)


def _format_graph(g: Graph, fmt: str) -> str:
    return g.to_adjlist() if fmt == "adjlist" else to_graph6(g)


# subcommands ------------------------------------------------------------------


def cmd_check(args, out) -> int:
    g = _read_graph(args.graph, args.format)
    rep = classify(g)
    if args.json:
        doc = {"n": g.n, "nullity": rep.nullity, "classification": str(rep.classification)}
        if args.witness:
            doc["witness"] = list(rep.kernel_witness) if rep.kernel_witness else None
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    out.write(f"{rep.classification}, nullity {rep.nullity}\n")
    if args.witness and rep.kernel_witness is not None:
        out.write("witness: " + " ".join(map(str, rep.kernel_witness)) + "\n")
    return EXIT_OK


def cmd_extend(args, out) -> int:
    g = _read_graph(args.graph, args.format)
    if not 0 <= args.vertex < g.n:
        raise UsageError(f"vertex {args.vertex} outside 0..{g.n - 1}")
    ext = fowler_extend(g, args.vertex)
    out.write(_format_graph(ext.result, args.output_format) + "\n")
    return EXIT_OK


def cmd_detect(args, out) -> int:
    g = _read_graph(args.graph, args.format)
    found = fowler_detect(g)
    if found is None:
        out.write("seed\n")
    else:
        base, pivot = found
        out.write(f"base {_format_graph(base, args.output_format)} pivot {pivot}\n")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    spec = GenSpec(args.n, args.d, min_girth=args.girth, connected_only=args.connected,
                   complement_mode=args.complement)
    if args.count_only:
        total = count(spec, nut_only=args.nut_only, workers=args.workers, budget=args.budget)
        out.write(f"{total}\n")
    else:
        write_graph6(spec, out, nut_only=args.nut_only, workers=args.workers, budget=args.budget)
    return EXIT_OK


def cmd_census(args, out) -> int:
    deadline = None if args.budget is None else time.monotonic() + args.budget
    rows = []
    for n in args.orders:
        if not is_admissible(n, args.d):
            continue
        left = None if deadline is None else max(deadline - time.monotonic(), 1e-3)
        rows.append((n, census(args.d, n, budget=left, workers=args.workers)))
    if args.json:
        doc = {"degree": args.d, "rows": [{"order": n, "count": c} for n, c in rows]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    for n, c in rows:
        if c or args.show_zero:
            out.write(f"{n} {c}\n")
    return EXIT_OK


def cmd_certify(args, out) -> int:
    mode = "trusting" if args.trusting else "strict"
    cert = certify_N(args.d, mode=mode, budget=args.budget, workers=args.workers)
    text = cert.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_seeds(args, out) -> int:
    seeds = load_seed_catalog(args.d)
    if args.validate:
        # loading already parsed and validated every entry
        for s in seeds:
            out.write(f"{s.label}: ok\n")
        out.write(f"{len(seeds)} seeds valid\n")
        return EXIT_OK
    for s in seeds:
        out.write(f"{s.degree} {s.order} {_format_graph(s.graph, args.output_format)}\n")
    return EXIT_OK


def cmd_vt(args, out) -> int:
    g = _read_graph(args.graph, args.format)
    if is_vertex_transitive(g):
        out.write("vertex-transitive\n")
    else:
        out.write(f"not vertex-transitive ({len(vertex_orbits(g))} orbits)\n")
    return EXIT_OK


def cmd_vt_pair(args, out) -> int:
    out.write(check_vt_conditions(args.n, args.d).describe() + "\n")
    return EXIT_OK


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nutkit", description="Nut graph toolkit.")
    p.add_argument("--version", action="version", version=f"nutkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="file path, '-' for stdin, or inline graph text")
        sp.add_argument("--format", choices=["auto", "adjlist", "graph6"], default="auto")
        sp.set_defaults(func=func)
        return sp

    def output_format(sp):
        sp.add_argument("--output-format", choices=["graph6", "adjlist"], default="graph6")

    def compute(sp):
        sp.add_argument("--workers", type=int, default=default_workers())
        sp.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET,
                        help=f"seconds allowed (default {DEFAULT_BUDGET:g}; 'inf' for none)")

    sp = graph_cmd("check", cmd_check, "classify a graph")
    sp.add_argument("--witness", action="store_true", help="print the kernel vector")
    sp.add_argument("--json", action="store_true")

    sp = graph_cmd("extend", cmd_extend, "apply the Fowler construction")
    sp.add_argument("--vertex", "-v", type=int, required=True)
    output_format(sp)

    sp = graph_cmd("detect", cmd_detect, "undo the Fowler construction if possible")
    output_format(sp)

    sp = sub.add_parser("generate", help="enumerate d-regular graphs")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("--girth", type=int, default=None)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--nut-only", action="store_true")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--complement", action=argparse.BooleanOptionalAction, default=None,
                    help="force complement mode on or off (default: automatic)")
    compute(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("census", help="count d-regular nut graphs per order")
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("--orders", type=_orders, required=True, metavar="A..B")
    sp.add_argument("--show-zero", action="store_true", help="also print orders with no nuts")
    sp.add_argument("--json", action="store_true")
    compute(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("certify", help="emit the existence certificate for N(d)")
    sp.add_argument("-d", type=int, required=True, choices=range(3, 12), metavar="D")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", help="recount every exclusion (default)")
    mode.add_argument("--trusting", action="store_true", help="record exclusions without recounting")
    sp.add_argument("--out", help="write the JSON here instead of stdout")
    compute(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("seeds", help="list or validate the embedded seed catalog")
    sp.add_argument("--validate", action="store_true")
    sp.add_argument("-d", type=int, default=None)
    output_format(sp)
    sp.set_defaults(func=cmd_seeds)

    graph_cmd("vt", cmd_vt, "test vertex-transitivity")

    sp = sub.add_parser("vt-pair", help="check the vertex-transitive nut conditions on (n, d)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp.set_defaults(func=cmd_vt_pair)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "workers", 1) < 1:
        err.write("nutkit: error: --workers must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (BudgetExceeded, ExclusionUnverified) as exc:
        err.write(f"nutkit: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, AdjListError, Graph6Error, InvalidGraph) as exc:
        err.write(f"nutkit: error: {exc}\n")
        return EXIT_USAGE
    except NutkitError as exc:
        err.write(f"nutkit: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
