"""Command-line front end.

Subcommands: pairs (enumerate or check admissible pairs), verify (full
structure verification with a JSON report), table (Cayley table export),
field-info (canonical field construction data).  Exit codes: 0 all checks
passed, 1 a mathematical check failed or a cap was hit, 2 usage or
validation error.  Output is byte-deterministic for a fixed command line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dickson import enumerate_pairs, pair_report
from .errors import NotPrimeError, OrderCapError, PairInvalidError
from .ff import DEFAULT_ORDER_CAP, build_field, with_generator
from .nearfield import (
    DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_EXPORT_CAP,
    DEFAULT_SAMPLES,
    build_nearfield,
    export_cayley,
    verify_structure,
)


def _add_cap_flags(sub):
    sub.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                     help="largest q**n that may be constructed")
    sub.add_argument("--seed", type=int, default=0,
                     help="PRNG seed for sampled scans")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicksonlab",
        description="build and verify coset-twisted finite multiplicative structures",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_pairs = subs.add_parser("pairs", help="enumerate or check admissible (q, n) pairs")
    p_pairs.add_argument("--max-order", type=int,
                         help="enumerate pairs with q**n up to this bound")
    p_pairs.add_argument("--min-n", type=int, default=1,
                         help="smallest n to include in the enumeration")
    p_pairs.add_argument("--check", nargs=2, type=int, metavar=("Q", "N"),
                         help="check a single pair instead of enumerating")
    p_pairs.add_argument("--format", choices=("json", "csv", "text"), default="json")
    _add_cap_flags(p_pairs)
    p_pairs.set_defaults(func=cmd_pairs)

    p_verify = subs.add_parser("verify", help="run the full structure verification")
    p_verify.add_argument("q", type=int)
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--generator", type=int, default=1, metavar="DLOG_OFFSET",
                          help="use g**u as the generator; u must be coprime to q**n - 1")
    p_verify.add_argument("--mode", choices=("auto", "exhaustive", "sampled"),
                          default="auto")
    p_verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                          help="triples drawn per sampled law")
    p_verify.add_argument("--exhaustive-cap", type=int, default=None,
                          help="largest order verified with exhaustive triple scans")
    p_verify.add_argument("--format", choices=("json", "text"), default="json")
    _add_cap_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = subs.add_parser("table", help="export one Cayley table")
    p_table.add_argument("q", type=int)
    p_table.add_argument("n", type=int)
    p_table.add_argument("path", nargs="?",
                         help="output file; stdout when omitted")
    p_table.add_argument("--op", choices=("add", "circle", "mul"), default="circle")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--export-cap", type=int, default=DEFAULT_EXPORT_CAP)
    p_table.add_argument("--generator", type=int, default=1, metavar="DLOG_OFFSET")
    _add_cap_flags(p_table)
    p_table.set_defaults(func=cmd_table)

    p_info = subs.add_parser("field-info", help="print canonical field construction data")
    p_info.add_argument("p", type=int)
    p_info.add_argument("m", type=int)
    p_info.add_argument("--generator-dlog", type=int, default=1,
                        help="rebase to the generator g**u")
    p_info.add_argument("--format", choices=("json", "text"), default="json")
    _add_cap_flags(p_info)
    p_info.set_defaults(func=cmd_field_info)

    return parser


def _validate_common(args, parser):
    if args.order_cap < 2:
        parser.error("--order-cap must be at least 2")
    if hasattr(args, "exhaustive_cap"):
        cap = args.exhaustive_cap
        if cap is None:
            # the default never outruns a lowered order cap
            args.exhaustive_cap = min(DEFAULT_EXHAUSTIVE_CAP, args.order_cap)
        else:
            if cap < 1:
                parser.error("--exhaustive-cap must be positive")
            if cap > args.order_cap:
                parser.error("--exhaustive-cap cannot exceed --order-cap")
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be positive")
    export_cap = getattr(args, "export_cap", None)
    if export_cap is not None and export_cap < 1:
        parser.error("--export-cap must be positive")


def cmd_pairs(args) -> int:
    if args.check is not None:
        q, n = args.check
        if q < 2 or n < 1:
            print("error: need q >= 2 and n >= 1", file=sys.stderr)
            return 2
        if n > 10**6:
            print("error: n is unreasonably large", file=sys.stderr)
            return 2
        report = pair_report(q, n)
        if args.format == "json":
            print(json.dumps(report))
        else:
            verdict = "valid" if report["valid"] else f"invalid: condition {report['violated']}"
            print(verdict)
        return 0 if report["valid"] else 1
    if args.max_order is None:
        print("error: pass --max-order or --check", file=sys.stderr)
        return 2
    if args.max_order < 2 or args.max_order > args.order_cap:
        print("error: --max-order must lie in [2, order cap]", file=sys.stderr)
        return 2
    found = enumerate_pairs(args.max_order, min_n=max(1, args.min_n))
    rows = [
        {"q": pr.q, "p": pr.p, "l": pr.l, "n": pr.n, "order": pr.order,
         "trivial": pr.trivial}
        for pr in found
    ]
    if args.format == "json":
        print(json.dumps({"max_order": args.max_order, "min_n": args.min_n,
                          "count": len(rows), "pairs": rows}))
    elif args.format == "csv":
        print("q,p,l,n,order,trivial")
        for r in rows:
            print(f"{r['q']},{r['p']},{r['l']},{r['n']},{r['order']},{str(r['trivial']).lower()}")
    else:
        for r in rows:
            print(f"({r['q']}, {r['n']}) order={r['order']}"
                  + (" trivial" if r["trivial"] else ""))
    return 0


def cmd_verify(args) -> int:
    nf = build_nearfield(args.q, args.n, generator_dlog=args.generator,
                         order_cap=args.order_cap)
    report = verify_structure(nf, mode=args.mode, samples=args.samples,
                              seed=args.seed, exhaustive_cap=args.exhaustive_cap)
    if args.format == "json":
        print(report.to_json())
    else:
        d = report.to_dict()
        print(f"pair ({args.q}, {args.n}) order {nf.order} mode {d['mode']}")
        for name, verdict in d["axioms"].items():
            state = "holds" if verdict["holds"] else "fails"
            extra = f" witness={verdict['witness']}" if verdict["witness"] else ""
            print(f"  {name}: {state} [{verdict['mode']}]{extra}")
        print(f"  center size {d['center']['size']}: {d['center']['elements']}")
        print(f"  kernel size {d['kernel']['size']}")
        for name, ok in d["theorems"].items():
            print(f"  {name}: {'ok' if ok else 'FAILED'}")
        print(f"passed: {str(d['passed']).lower()}")
    return 0 if report.passed else 1


def cmd_table(args) -> int:
    nf = build_nearfield(args.q, args.n, generator_dlog=args.generator,
                         order_cap=args.order_cap)
    doc = export_cayley(nf, which=args.op, fmt=args.format,
                        export_cap=args.export_cap)
    print(nf.field.spec.to_json(), file=sys.stderr)
    if args.path:
        with open(args.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


def cmd_field_info(args) -> int:
    table = build_field(args.p, args.m, order_cap=args.order_cap)
    if args.generator_dlog != 1:
        units = table.units
        u = args.generator_dlog % units if units > 1 else 0
        table = with_generator(table, table.exp[u])
    spec = table.spec
    if args.format == "json":
        print(spec.to_json())
    else:
        print(f"p={spec.p} m={spec.m} order={table.order}")
        print(f"modulus={list(spec.modulus)}")
        print(f"generator={spec.generator}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate_common(args, parser)
    try:
        return args.func(args)
    except PairInvalidError as exc:
        print(f"invalid: condition {exc.condition}", file=sys.stderr)
        return 2
    except OrderCapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 1
    except NotPrimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
