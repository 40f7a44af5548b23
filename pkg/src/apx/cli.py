"""apx command line interface.

Exit codes: 0 success/verified, 1 verification mismatch, 2 usage or
range error, 3 I/O or network error.  All output is byte-deterministic
for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import urllib.error

from . import count as counting
from . import oracle, sieve
from .kcore import Parity, divisor_set, k_product, k_quotient
from .oeis import BFileParseError, compare_table, fetch_bfile, load_bfile, parse_bfile
from .partitions import MAX_ENUM_N, ap_lengths, expand, iter_ap

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

OEIS_IDS = {"ap": "A049988", "apdiv": "A175239"}


class CommandError(Exception):
    """CLI failure with an exit code; message goes to stderr."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _bound(default: int) -> int:
    """Resolve a default bound against the APX_MAX_N override."""
    raw = os.environ.get("APX_MAX_N")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise CommandError(f"APX_MAX_N is not an integer: {raw!r}") from None
    if value < 1:
        raise CommandError(f"APX_MAX_N must be >= 1, got {value}")
    return value


def _check(n: int, default_bound: int, name: str = "n") -> int:
    limit = _bound(default_bound)
    if n > limit:
        raise CommandError(
            f"{name}={n} exceeds the bound {limit} (set APX_MAX_N to override)"
        )
    return limit


def _cmd_count(args) -> int:
    _check(args.n, counting.MAX_COUNT_N)
    result = counting.ap_count(args.n)
    if args.breakdown:
        print(f"trivial {result.trivial}")
        print(f"even {result.even_sum}")
        print(f"odd {result.odd_sum}")
        print(f"total {result.total}")
    else:
        print(result.total)
    return EXIT_OK


def _cmd_list(args) -> int:
    limit = _check(args.n, MAX_ENUM_N)
    for p in iter_ap(args.n, max_n=limit):
        parts = expand(p, max_len=limit)
        if args.format == "json":
            print(json.dumps(
                {"n": p.n, "first": p.first, "diff": p.diff,
                 "length": p.length, "parts": parts}
            ))
        else:
            print(" + ".join(map(str, parts)) + f" = {p.n}")
    return EXIT_OK


def _cmd_lengths(args) -> int:
    _check(args.n, counting.MAX_COUNT_N)
    lengths = ap_lengths(args.n)
    print("{" + ", ".join(map(str, lengths)) + "}" + f" ({len(lengths)})")
    return EXIT_OK


def _emit_table(kind: str, n_max: int, out_path: str | None) -> int:
    limit = _check(n_max, sieve.MAX_RANGE_N, "N")
    make = sieve.ap_count_range if kind == "ap" else sieve.apdiv_count_range
    table = make(n_max, max_n=limit)
    try:
        stream = (
            open(out_path, "w", encoding="ascii", newline="\n")
            if out_path
            else sys.stdout
        )
        try:
            stream.write("n,value\n")
            for n, value in table.rows():
                stream.write(f"{n},{value}\n")
        finally:
            if out_path:
                stream.close()
    except OSError as exc:
        raise CommandError(str(exc), EXIT_IO) from None
    return EXIT_OK


def _cmd_seq(args) -> int:
    return _emit_table(args.kind, args.n, args.out)


def _cmd_comet(args) -> int:
    return _emit_table("ap", args.n, args.out)


def _cmd_verify_oracle(args) -> int:
    if args.n > oracle.MAX_ORACLE_N:
        raise CommandError(f"N={args.n} exceeds the oracle bound {oracle.MAX_ORACLE_N}")
    for n in range(1, args.n + 1):
        expected = oracle.brute_enumerate(n)
        total = counting.ap_count(n).total
        if total != len(expected):
            print(f"mismatch at n={n}: expected {len(expected)} (brute force), "
                  f"got {total} (formula)")
            return EXIT_MISMATCH
        got = [expand(p) for p in iter_ap(n)]
        if got != expected:
            print(f"mismatch at n={n}: enumerated partitions differ from brute force")
            return EXIT_MISMATCH
    print(f"OK: formula and enumeration agree with brute force for n=1..{args.n}")
    return EXIT_OK


def _cmd_verify_oeis(args) -> int:
    sequence_id = OEIS_IDS[args.kind]
    try:
        if args.fetch:
            bfile = parse_bfile(fetch_bfile(sequence_id), sequence_id)
        else:
            if args.bfile is None:
                raise CommandError("a b-file path is required unless --fetch is given")
            bfile = load_bfile(args.bfile)
    except BFileParseError as exc:
        raise CommandError(f"b-file parse error: {exc}", EXIT_IO) from None
    except urllib.error.URLError as exc:
        raise CommandError(f"network error fetching {sequence_id}: {exc}", EXIT_IO) from None
    except OSError as exc:
        raise CommandError(str(exc), EXIT_IO) from None

    n_max = bfile.last_index()
    if args.limit is not None:
        n_max = min(n_max, args.limit)
    if n_max < 1:
        print("warning: 0 terms compared", file=sys.stderr)
        return EXIT_OK
    limit = _check(n_max, sieve.MAX_RANGE_N, "limit")
    make = sieve.ap_count_range if args.kind == "ap" else sieve.apdiv_count_range
    table = make(n_max, max_n=limit)
    mismatches, compared = compare_table(table, bfile, n_max)
    if mismatches:
        for index, expected, got in mismatches[:10]:
            print(f"mismatch at n={index}: expected {expected}, got {got}")
        print(f"{sequence_id}: {len(mismatches)} mismatches out of {compared} terms")
        return EXIT_MISMATCH
    if compared == 0:
        print("warning: 0 terms compared", file=sys.stderr)
        return EXIT_OK
    print(f"{sequence_id}: {compared} terms match")
    return EXIT_OK


def _cmd_kcalc_product(args) -> int:
    print(k_product(args.m, args.n, args.k))
    return EXIT_OK


def _cmd_kcalc_quotient(args) -> int:
    if args.b == 0:
        raise CommandError("quotient by zero")
    value = k_quotient(args.a, args.b, args.k)
    print("not divisible" if value is None else value)
    return EXIT_OK


def _cmd_kcalc_divisors(args) -> int:
    _check(args.n, counting.MAX_COUNT_N)
    ds = divisor_set(args.n, Parity.of(args.k))
    print(" ".join(map(str, ds.divisors)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apx",
        description="Count and list partitions of n into arithmetic progressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of AP partitions of n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--breakdown", action="store_true",
                   help="print the trivial/even/odd summands")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("list", help="list every AP partition of n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("lengths", help="distinct partition lengths of n")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=_cmd_lengths)

    p = sub.add_parser("seq", help="emit a sequence table as CSV")
    p.add_argument("kind", choices=("ap", "apdiv"))
    p.add_argument("n", type=_positive_int, metavar="N")
    p.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("comet", help="emit comet scatter data (same as 'seq ap')")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_comet)

    p = sub.add_parser("verify-oracle", help="check the formula against brute force")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.set_defaults(func=_cmd_verify_oracle)

    p = sub.add_parser("verify-oeis", help="check a sequence against an OEIS b-file")
    p.add_argument("kind", choices=("ap", "apdiv"))
    p.add_argument("bfile", nargs="?", metavar="BFILE", help="path to a b-file")
    p.add_argument("--limit", type=_positive_int, help="compare at most this many indices")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fetch", action="store_true",
                       help="download the b-file from oeis.org")
    group.add_argument("--offline", action="store_true",
                       help="never touch the network (default)")
    p.set_defaults(func=_cmd_verify_oeis)

    p = sub.add_parser("kcalc", help="k-arithmetic calculator")
    ksub = p.add_subparsers(dest="op", required=True)

    kp = ksub.add_parser("product", help="m (*k) n")
    kp.add_argument("m", type=int)
    kp.add_argument("n", type=int)
    kp.add_argument("k", type=int)
    kp.set_defaults(func=_cmd_kcalc_product)

    kq = ksub.add_parser("quotient", help="a (/k) b, or 'not divisible'")
    kq.add_argument("a", type=int)
    kq.add_argument("b", type=int)
    kq.add_argument("k", type=int)
    kq.set_defaults(func=_cmd_kcalc_quotient)

    kd = ksub.add_parser("divisors", help="divisor set of n in the k-arithmetic")
    kd.add_argument("n", type=_positive_int)
    kd.add_argument("k", type=int)
    kd.set_defaults(func=_cmd_kcalc_divisors)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"apx: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the stream
        return EXIT_IO
