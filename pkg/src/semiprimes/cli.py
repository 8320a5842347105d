"""Command-line front-end: classify, count, nth, next, stream, table.

Exit status 0 on success, 1 on an internal mismatch (a --verify cross-check
or a golden-table row disagreeing), 2 on usage, domain, or range errors.
Diagnostics go to stderr as a single line.
"""

import argparse
import json
import sys
import time

from . import bench, oracle
from .core import Category, classify, semiprime_count
from .sequences import next_semiprime, nth_semiprime, semiprime_stream

OK = 0
MISMATCH = 1
USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _natural_arg(text):
    if not text.isdecimal():
        raise argparse.ArgumentTypeError(f"expected a base-10 natural number, got {text!r}")
    return int(text, 10)


def _fail(message):
    print(f"semiprimes: error: {message}", file=sys.stderr)


def _mismatch(message):
    print(f"semiprimes: verification failed: {message}", file=sys.stderr)
    return MISMATCH


def _emit_scalar(args, value, method, elapsed):
    n = args.number
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        print(json.dumps({"input": n, "result": value, "method": method, "elapsed_s": elapsed}))
    else:
        print("input,result,method,elapsed_s")
        print(f"{n},{value},{method},{elapsed!r}")


def _count_via(method, n, threads):
    if method == "formula":
        return semiprime_count(n, threads=threads)
    if method == "classical":
        return oracle.classical_count(n)
    return oracle.semiprime_count_by_sieve(n)


def _count_check(method, n):
    # one independent route: the classical prime-table count when available,
    # the factoring sieve otherwise (and for the classical method itself)
    if method != "classical" and n >= 4:
        return "classical", oracle.classical_count(n)
    return "sieve", oracle.semiprime_count_by_sieve(n)


def _cmd_count(args):
    begin = time.perf_counter()
    value = _count_via(args.method, args.number, args.threads)
    elapsed = time.perf_counter() - begin
    if args.verify:
        name, check = _count_check(args.method, args.number)
        if check != value:
            return _mismatch(f"count({args.number}): {args.method}={value} but {name}={check}")
    _emit_scalar(args, value, args.method, elapsed)
    return OK


_OMEGA_CATEGORY = {1: Category.PRIME, 2: Category.SEMIPRIME}


def _cmd_classify(args):
    begin = time.perf_counter()
    result = classify(args.number)
    elapsed = time.perf_counter() - begin
    if args.verify:
        omega = oracle.factor_profile(args.number).omega
        expected = _OMEGA_CATEGORY.get(omega, Category.COMPOSITE_MANY_FACTORS)
        if expected is not result.category:
            return _mismatch(
                f"classify({args.number})={result.category.value} but trial division "
                f"finds {omega} prime factors"
            )
    trip = result.triple
    if args.format == "plain":
        if trip is None:
            print(f"{result.category.value} (small domain)")
        else:
            print(f"{result.category.value} (T={trip.t}, K1={trip.k1}, K2={trip.k2})")
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "input": args.number,
                    "result": result.category.value,
                    "triple": list(trip) if trip else None,
                    "method": "formula",
                    "elapsed_s": elapsed,
                }
            )
        )
    else:
        print("input,category,t,k1,k2")
        bits = (str(trip.t), str(trip.k1), str(trip.k2)) if trip else ("", "", "")
        print(f"{args.number},{result.category.value},{bits[0]},{bits[1]},{bits[2]}")
    return OK


def _oracle_nth(n):
    found = 0
    x = 3
    while found < n:
        x += 1
        found += oracle.is_semiprime_oracle(x)
    return x


def _oracle_next(n):
    # callers have already validated n >= 4, so every probe is >= 5
    x = n + 1
    while not oracle.is_semiprime_oracle(x):
        x += 1
    return x


def _cmd_nth(args):
    begin = time.perf_counter()
    value = nth_semiprime(args.number, mode=args.mode)
    elapsed = time.perf_counter() - begin
    if args.verify:
        check = _oracle_nth(args.number)
        if check != value:
            return _mismatch(f"nth({args.number})={value} but oracle scan gives {check}")
    _emit_scalar(args, value, args.mode, elapsed)
    return OK


def _cmd_next(args):
    begin = time.perf_counter()
    value = next_semiprime(args.number, mode=args.mode)
    elapsed = time.perf_counter() - begin
    if args.verify:
        check = _oracle_next(args.number)
        if check != value:
            return _mismatch(f"next({args.number})={value} but oracle scan gives {check}")
    _emit_scalar(args, value, args.mode, elapsed)
    return OK


def _cmd_stream(args):
    begin = time.perf_counter()
    values = semiprime_stream(args.start, args.count)
    elapsed = time.perf_counter() - begin
    if args.format == "plain":
        for v in values:
            print(v)
    elif args.format == "json":
        print(
            json.dumps(
                {"input": args.start, "result": values, "method": "scan", "elapsed_s": elapsed}
            )
        )
    else:
        print("index,value")
        for i, v in enumerate(values, start=1):
            print(f"{i},{v}")
    return OK


def _cmd_table(args):
    rows = bench.reproduce_table(args.table_id, max_input=args.max_input, long_run=args.long_run)
    if args.format == "plain":
        print(f"{'input':>12} {'expected':>12} {'computed':>12} {'elapsed_s':>12} match")
        for r in rows:
            flag = "true" if r.match else "false"
            print(f"{r.input:>12} {r.expected:>12} {r.computed:>12} {r.elapsed_s:>12.6f} {flag}")
    elif args.format == "json":
        print(bench.rows_to_json(rows))
    else:
        sys.stdout.write(bench.rows_to_csv(rows))
    if all(r.match for r in rows):
        return OK
    _fail("one or more table rows did not match the expected values")
    return MISMATCH


def _add_format(p):
    p.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain", help="output format"
    )


def _add_verify(p, what):
    p.add_argument("--verify", action="store_true", help=f"cross-check against {what}; exit 1 on disagreement")


def _build_parser():
    parser = _Parser(prog="semiprimes", description="Semiprime testing, counting and search.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="categorize x as prime, semiprime, or 3+ prime factors")
    p.add_argument("number", metavar="x", type=_natural_arg, help="integer >= 2")
    _add_verify(p, "trial-division factoring")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("count", help="number of semiprimes <= N")
    p.add_argument("number", metavar="N", type=_natural_arg, help="upper bound >= 1")
    p.add_argument(
        "--method",
        choices=("formula", "classical", "sieve"),
        default="formula",
        help="counting route (default: formula)",
    )
    p.add_argument(
        "--threads",
        type=_natural_arg,
        default=1,
        help="consecutive range partitions evaluated concurrently (formula method)",
    )
    _add_verify(p, "an independent counting route")
    _add_format(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("nth", help="the nth semiprime in ascending order")
    p.add_argument("number", metavar="n", type=_natural_arg, help="ordinal index >= 1")
    p.add_argument("--mode", choices=("scan", "literal"), default="scan", help="evaluation mode")
    _add_verify(p, "a trial-division scan")
    _add_format(p)
    p.set_defaults(handler=_cmd_nth)

    p = sub.add_parser("next", help="smallest semiprime strictly greater than N")
    p.add_argument("number", metavar="N", type=_natural_arg, help="starting point")
    p.add_argument("--mode", choices=("scan", "literal"), default="scan", help="evaluation mode")
    _add_verify(p, "a trial-division scan")
    _add_format(p)
    p.set_defaults(handler=_cmd_next)

    p = sub.add_parser("stream", help="the k semiprimes following a starting point")
    p.add_argument("start", metavar="from", type=_natural_arg, help="starting point >= 4")
    p.add_argument("count", metavar="k", type=_natural_arg, help="how many semiprimes to emit")
    _add_format(p)
    p.set_defaults(handler=_cmd_stream)

    p = sub.add_parser("table", help="recompute a golden result table")
    p.add_argument("table_id", metavar="id", type=int, choices=(1, 2, 3, 4), help="table number")
    p.add_argument(
        "--max-input",
        type=_natural_arg,
        default=10**6,
        help="skip rows whose input exceeds this (default 10^6)",
    )
    p.add_argument(
        "--long-run",
        action="store_true",
        help="include the 10^7 and 10^8 counting rows (minutes to hours)",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:  # DomainError, RangeLimitError, bad mode/table
        _fail(str(exc))
        return USAGE


if __name__ == "__main__":
    raise SystemExit(main())
