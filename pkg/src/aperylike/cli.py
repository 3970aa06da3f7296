"""Command-line front end.

Exit status: 0 when everything checked holds, 1 when at least one case
failed, 2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import sequences
from .sequences import SequenceId, gf_rhs_series
from .verify import (
    DEFAULT_M_VALUES,
    InternalError,
    Options,
    UnknownClaim,
    format_records,
    list_claims,
    lookup,
    select_kinds,
    summarize,
    verify_claims,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CACHE_ENV = "APERYLIKE_CACHE"


class UsageError(Exception):
    pass


def _sequence_id(text: str) -> SequenceId:
    key = text.strip().upper()
    if key in ("B", "BAZ"):
        key = "B_AZ"
    try:
        return SequenceId(key)
    except ValueError:
        names = ", ".join(s.value for s in SequenceId)
        raise argparse.ArgumentTypeError(f"unknown sequence {text!r} (choose from {names})") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        items = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return items


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aperylike", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="print sequence values")
    seq.add_argument("--id", dest="seq_id", type=_sequence_id, required=True)
    seq.add_argument("--from", dest="start", type=_nonnegative, default=0)
    seq.add_argument("--to", dest="stop", type=_nonnegative, required=True)
    seq.add_argument("--method", choices=("sum", "recurrence", "both"), default="recurrence")

    ver = sub.add_parser("verify", help="check claims over a range of primes")
    which = ver.add_mutually_exclusive_group(required=True)
    which.add_argument("--claim", action="append", dest="claims", metavar="ID")
    which.add_argument("--all", action="store_true")
    ver.add_argument("--kinds", choices=("theorem", "conjecture", "lemma", "all"), default="all")
    ver.add_argument("--pmin", type=_positive, default=5)
    ver.add_argument("--pmax", type=_positive, default=None,
                     help="default: 200 for theorems, 100 for conjectures and Bernoulli/Euler claims")
    ver.add_argument("--m-set", type=_int_list, default=None, help="comma list replacing the default m sample")
    ver.add_argument("--max-index", type=_positive, default=None, help="cap on sequence indices for index conjectures")
    ver.add_argument("--format", choices=("human", "records"), default="human")
    ver.add_argument("--jobs", type=_positive, default=1)
    ver.add_argument("--quiet", action="store_true", help="suppress the human summary table")

    claims = sub.add_parser("claims", help="inspect the claim registry")
    claims_sub = claims.add_subparsers(dest="action", required=True)
    claims_sub.add_parser("list")
    show = claims_sub.add_parser("show")
    show.add_argument("claim_id")

    gf = sub.add_parser("gf-check", help="compare the V_n generating function with the sequence")
    gf.add_argument("--order", type=_nonnegative, default=30)

    cache = sub.add_parser("cache", help="write or validate a value cache file")
    cache.add_argument("--file", default=None, help=f"cache path (default: ${CACHE_ENV})")
    cache.add_argument("--mode", choices=("warm", "read"), default="read")
    cache.add_argument("--ids", default=None, help="comma list of sequence ids to warm (default: all)")
    cache.add_argument("--to", dest="stop", type=_nonnegative, default=100)
    return parser


def _cmd_seq(args, out) -> int:
    if args.start > args.stop:
        raise UsageError("--from exceeds --to")
    rec = sequences.values(args.seq_id, args.stop) if args.method != "sum" else None
    for n in range(args.start, args.stop + 1):
        if args.method == "recurrence":
            value = rec[n]
        else:
            value = sequences.value_by_definition(args.seq_id, n)
            if args.method == "both" and value != rec[n]:
                print(f"mismatch at n={n}: sum {value} recurrence {rec[n]}", file=sys.stderr)
                return EXIT_FAIL
        print(f"{n} {value}", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    ids = args.claims if args.claims else select_kinds(args.kinds)
    for cid in ids:
        lookup(cid)
    options = Options(
        m_values=args.m_set if args.m_set is not None else DEFAULT_M_VALUES,
        max_index=args.max_index,
    )
    if args.pmax is not None and args.pmin > args.pmax:
        raise UsageError("--pmin exceeds --pmax")
    report = verify_claims(ids, args.pmin, args.pmax, options, jobs=args.jobs)
    if args.format == "records":
        out.write(format_records(report))
    elif args.quiet:
        for line in summarize(report).splitlines():
            if line.startswith("FAIL"):
                print(line, file=out)
    else:
        print(summarize(report), file=out)
    return EXIT_FAIL if report.failed else EXIT_OK


def _cmd_claims(args, out) -> int:
    if args.action == "list":
        for c in list_claims():
            print(f"{c.id}\t{c.kind}\t{c.applicability}\tmod {c.modulus}", file=out)
        return EXIT_OK
    c = lookup(args.claim_id)
    print(f"id: {c.id}", file=out)
    print(f"kind: {c.kind}", file=out)
    print(f"statement: {c.statement}", file=out)
    print(f"applicability: {c.applicability}", file=out)
    print(f"modulus: {c.modulus}", file=out)
    if c.readings:
        print(f"readings: {', '.join(c.readings)}", file=out)
    if c.index_capped:
        print("index-capped: yes", file=out)
    print(f"default p_max: {c.default_pmax}", file=out)
    return EXIT_OK


def _cmd_gf(args, out) -> int:
    series = gf_rhs_series(args.order)
    v = sequences.values(SequenceId.V, args.order)
    for n in range(args.order + 1):
        if series[n] != v[n]:
            print(f"MISMATCH order={args.order} at n={n}: series {series[n]} V_n {v[n]}", file=out)
            return EXIT_FAIL
    print(f"OK order={args.order}", file=out)
    return EXIT_OK


def _cmd_cache(args, out) -> int:
    path = args.file or os.environ.get(CACHE_ENV)
    if not path:
        raise UsageError(f"no cache path: pass --file or set {CACHE_ENV}")
    if args.mode == "warm":
        ids = [_sequence_id(t) for t in args.ids.split(",")] if args.ids else list(SequenceId)
        count = sequences.write_cache(path, ids, args.stop)
        print(f"wrote {count} values to {path}", file=out)
        return EXIT_OK
    tables = sequences.read_cache(path)
    for seq, vals in tables.items():
        print(f"{seq.value} n=0..{len(vals) - 1} ok", file=out)
    return EXIT_OK


_COMMANDS = {"seq": _cmd_seq, "verify": _cmd_verify, "claims": _cmd_claims, "gf-check": _cmd_gf, "cache": _cmd_cache}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except UnknownClaim as exc:
        print(f"unknown claim: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, argparse.ArgumentTypeError, sequences.CacheFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
