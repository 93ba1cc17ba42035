"""Command-line front end.

Exit status: 0 on success, 1 on a domain or validation error, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .checks import SUITES, run_suite
from .core import compare, nat_add
from .invariant import UncountableMultiset, bound_sums, exact_sums
from .io import FormatError, load_json, multiset_from_doc, sequence_from_doc, steps_from_doc, tree_from_doc
from .mixed import BoundExceeded, enumerate_pure_interleavings
from .sequence import StepSet
from .sums import g_sum, g_sum_spectrum, iter_nat_sum, iter_ord_sum, tail_character
from .syntax import ParseError, parse_ordinal, print_ordinal as fmt
from .trees import extension_order_type, rank, size


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordcalc", description="Exact transfinite ordinal sums.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("eval", help="print the normal form of an expression").add_argument("expr")
    c = sub.add_parser("cmp", help="compare two expressions")
    c.add_argument("left")
    c.add_argument("right")
    for name, text in [("itersum", "iterated natural sum"), ("ordsum", "ordinary transfinite sum"),
                       ("spectrum", "every partial natural sum value"), ("tail", "tail split point and exponent")]:
        sub.add_parser(name, help=f"{text} of a sequence file").add_argument("file")
    g = sub.add_parser("gsum", help="partial natural sum for a step set")
    g.add_argument("file")
    mode = g.add_mutually_exclusive_group(required=True)
    mode.add_argument("--steps", metavar="FILE")
    mode.add_argument("--all-natural", action="store_true")
    mode.add_argument("--all-ordinary", action="store_true")
    k = sub.add_parser("carruth", help="order types of pure interleavings")
    k.add_argument("left")
    k.add_argument("right")
    k.add_argument("--bound", type=int, default=12, help="maximum joint block count")
    n = sub.add_parser("nsum", help="invariant sums of a multiset file")
    n.add_argument("file")
    nm = n.add_mutually_exclusive_group(required=True)
    nm.add_argument("--exact", action="store_true")
    nm.add_argument("--bound", action="store_true")
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--arrangements", type=int, default=24)
    sub.add_parser("treesize", help="size, rank and extension type of a tree file").add_argument("file")
    ch = sub.add_parser("check", help="run seeded property suites")
    ch.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    ch.add_argument("--seed", type=int, default=None)
    ch.add_argument("--cases", type=int, default=50)
    return p


def _seed(arg: Optional[int]) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("ORDCALC_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ORDCALC_SEED must be an integer, got {env!r}")


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "eval":
        print(fmt(parse_ordinal(args.expr)), file=out)
    elif cmd == "cmp":
        print(compare(parse_ordinal(args.left), parse_ordinal(args.right)).symbol, file=out)
    elif cmd in ("itersum", "ordsum", "spectrum", "tail", "gsum"):
        s = sequence_from_doc(load_json(args.file))
        if cmd == "itersum":
            print(fmt(iter_nat_sum(s)), file=out)
        elif cmd == "ordsum":
            print(fmt(iter_ord_sum(s)), file=out)
        elif cmd == "spectrum":
            for v in g_sum_spectrum(s):
                print(fmt(v), file=out)
        elif cmd == "tail":
            tc = tail_character(s)
            print(f"gamma_bar: {fmt(tc.gamma_bar)}", file=out)
            print(f"xi: {fmt(tc.xi)}", file=out)
            print(f"total: {fmt(tc.total)}", file=out)
        else:
            if args.steps:
                g = steps_from_doc(load_json(args.steps))
            else:
                g = StepSet.all_natural() if args.all_natural else StepSet.all_ordinary()
            print(fmt(g_sum(s, g)), file=out)
    elif cmd == "carruth":
        a, b = parse_ordinal(args.left), parse_ordinal(args.right)
        vals = enumerate_pure_interleavings(a, b, args.bound)
        top, nat = max(vals), nat_add(a, b)
        print("interleavings: " + ", ".join(fmt(v) for v in vals), file=out)
        print(f"max: {fmt(top)}", file=out)
        print(f"natural sum: {fmt(nat)}", file=out)
        if top != nat:
            print("error: maximum interleaving differs from the natural sum", file=sys.stderr)
            return 1
    elif cmd == "nsum":
        m = multiset_from_doc(load_json(args.file))
        if args.exact:
            r = exact_sums(m)
            print(f"nsum: {fmt(r.nsum)}", file=out)
            print(f"nsum_bullet: {fmt(r.nsum_bullet)}", file=out)
            if r.nsum_circ is not None:
                print(f"nsum_circ: {fmt(r.nsum_circ)}", file=out)
        else:
            r = bound_sums(m, args.arrangements, args.seed)
            print(f"lower: {fmt(r.lower)}", file=out)
            print(f"nsum <= {fmt(r.nsum)}", file=out)
            print(f"nsum_bullet <= {fmt(r.nsum_bullet)}", file=out)
    elif cmd == "treesize":
        t = tree_from_doc(load_json(args.file))
        print(f"size: {fmt(size(t))}", file=out)
        print(f"rank: {fmt(rank(t))}", file=out)
        print(f"extension: {fmt(extension_order_type(t))}", file=out)
    elif cmd == "check":
        results = run_suite(args.suite, _seed(args.seed), args.cases)
        bad = False
        for r in results:
            print(r, file=out)
            for f in r.failures[:5]:
                print(f"  {f}", file=out)
            bad = bad or not r.ok
        return 1 if bad else 0
    return 0


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _run(args, out)
    except (ParseError, UsageError) as e:
        print(f"ordcalc: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"ordcalc: {e}", file=sys.stderr)
        return 1
    except (FormatError, UncountableMultiset, BoundExceeded, ValueError, IndexError) as e:
        print(f"ordcalc: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
