"""Command-line front end.

Results go to standard output, diagnostics and progress to standard
error, and nothing is written to disk except an explicitly given
checkpoint path.  All numbers print as exact decimals.

Exit codes:
    0   success (comparable pair, total order verified, ...)
    1   runtime failure
    2   usage error (argparse)
    3   an INCOMPARABLE pair was found (scriptable counterexample signal)
    4   checkpoint file rejected (hash chain or parameter mismatch)
    130 interrupted; checkpointed progress is already flushed
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arith import inverse_totient, totient
from .comparator import Verdict, compare, comparison_record, record_to_json
from .cyclotomic import CycloCache, cyclo
from .order import (
    CheckpointError,
    IncomparablePairError,
    NotLessError,
    build_chain,
    check_conjecture2,
    format_bfile,
    format_delimited,
    format_plain,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INCOMPARABLE = 3
EXIT_CHECKPOINT = 4

FORMATS = ("plain", "structured", "oeis-bfile", "delimited")


@dataclass
class RunConfig:
    """Parsed invocation: one subcommand plus the knobs it uses."""

    subcommand: str
    range_max: int = 0
    workers: int = 1
    fmt: str = "plain"
    checkpoint: str | None = None
    verbosity: int = 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycorder",
        description=(
            "Exact computation and ordering of cyclotomic polynomial values: "
            "compare indices over all integer arguments q >= 2, build and "
            "verify the induced total order, and check successor claims."
        ),
    )
    parser.add_argument(
        "-w", "--workers", type=_positive, default=1,
        help="worker processes for chain/verify (default 1, reproducible timing)",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="progress detail on stderr (repeatable)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("cyclo", help="print a cyclotomic polynomial (and optionally its value)")
    p.add_argument("n", type=_positive)
    p.add_argument("q", type=int, nargs="?", default=None, help="evaluate at this q >= 2")

    p = sub.add_parser("compare", help="decide the order of two indices over all q >= 2")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--certificate", action="store_true", help="print the certificate record")

    p = sub.add_parser("chain", help="emit the stable prefix of the order on {1..N}")
    p.add_argument("range_max", type=_positive)
    p.add_argument("--format", choices=FORMATS, default="plain", dest="fmt")

    p = sub.add_parser("verify", help="verify the total order on {1..N}")
    p.add_argument("range_max", type=_positive)
    p.add_argument("--checkpoint", default=None, help="resume file, written per completed class")
    p.add_argument("--format", choices=("plain", "structured"), default="plain", dest="fmt")

    p = sub.add_parser("conjecture2", help="check that 2*3^i directly precedes 3^i")
    p.add_argument("i_max", type=_positive)

    p = sub.add_parser("invtot", help="list all x with totient(x) = v")
    p.add_argument("v", type=_positive)

    p = sub.add_parser("phi", help="print the totient of n")
    p.add_argument("n", type=_positive)

    return parser


def cmd_cyclo(n: int, q: int | None) -> int:
    if q is not None and q < 2:
        print(f"usage error: q must be >= 2, got {q}", file=sys.stderr)
        return EXIT_USAGE
    cache = CycloCache()
    poly = cyclo(n, cache)
    print("# coefficients in ascending degree order (constant term first)", file=sys.stderr)
    print(" ".join(str(c) for c in poly.coeffs))
    if q is not None:
        print(poly.eval_at(q))
    return EXIT_OK


def cmd_compare(m: int, n: int, emit_certificate: bool) -> int:
    cache = CycloCache()
    verdict, cert = compare(m, n, cache)
    print(verdict.value)
    if emit_certificate:
        print(record_to_json(comparison_record(m, n, verdict, cert)))
    return EXIT_INCOMPARABLE if verdict is Verdict.INCOMPARABLE else EXIT_OK


def _progress_printer(verbosity: int):
    if verbosity < 1:
        return None

    def progress(done: int, total: int, summary: dict) -> None:
        print(
            f"class phi={summary['phi']} size={len(summary['members'])} "
            f"pairs={summary['pair_count']} ({done}/{total})",
            file=sys.stderr,
        )

    return progress


def cmd_chain(range_max: int, fmt: str, workers: int, verbosity: int) -> int:
    report = build_chain(range_max, workers, progress=_progress_printer(verbosity))
    if fmt == "plain":
        text = format_plain(report)
    elif fmt == "oeis-bfile":
        text = format_bfile(report)
    elif fmt == "delimited":
        text = format_delimited(report)
    else:
        text = json.dumps(report.to_record(), sort_keys=True)
    if text:
        print(text)
    print(
        f"stable prefix length={report.stable_prefix_len} "
        f"ties={len(report.tie_pairs)} compares={report.pair_count} "
        f"classes={report.class_count}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(range_max: int, workers: int, checkpoint: str | None, fmt: str, verbosity: int) -> int:
    progress = _progress_printer(max(verbosity, 1))
    try:
        report = build_chain(
            range_max, workers, checkpoint_path=checkpoint, progress=progress
        )
    except CheckpointError as exc:
        print(f"checkpoint error: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT
    print(
        f"classes={report.class_count} compares={report.pair_count} "
        f"max threshold_c={report.max_threshold_c} ties={len(report.tie_pairs)}",
        file=sys.stderr,
    )
    for m, n, q in report.tie_pairs:
        print(f"tie: indices {m}, {n} agree at q={q}", file=sys.stderr)
    if fmt == "structured":
        print(json.dumps(report.to_record(), sort_keys=True))
    if report.incomparable_pairs:
        print("VERDICT INCOMPARABLE-PAIRS")
        for m, n, cert in report.incomparable_pairs:
            print(record_to_json(comparison_record(m, n, Verdict.INCOMPARABLE, cert)))
        return EXIT_INCOMPARABLE
    print("VERDICT TOTAL-ORDER")
    return EXIT_OK


def cmd_conjecture2(i_max: int) -> int:
    try:
        reports = check_conjecture2(i_max)
    except (NotLessError, IncomparablePairError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPARABLE if isinstance(exc, IncomparablePairError) else EXIT_FAILURE
    for i, rep in enumerate(reports, start=1):
        if rep.holds:
            print(f"i={i} HOLDS")
        else:
            blockers = ",".join(str(b) for b in rep.blockers)
            print(f"i={i} FAILS blockers=[{blockers}]")
    return EXIT_OK


def cmd_invtot(v: int) -> int:
    for x in inverse_totient(v):
        print(x)
    return EXIT_OK


def cmd_phi(n: int) -> int:
    print(totient(n))
    return EXIT_OK


def run(config: RunConfig, args: argparse.Namespace) -> int:
    if config.subcommand == "cyclo":
        return cmd_cyclo(args.n, args.q)
    if config.subcommand == "compare":
        return cmd_compare(args.m, args.n, args.certificate)
    if config.subcommand == "chain":
        return cmd_chain(config.range_max, config.fmt, config.workers, config.verbosity)
    if config.subcommand == "verify":
        return cmd_verify(
            config.range_max, config.workers, config.checkpoint, config.fmt, config.verbosity
        )
    if config.subcommand == "conjecture2":
        return cmd_conjecture2(args.i_max)
    if config.subcommand == "invtot":
        return cmd_invtot(args.v)
    if config.subcommand == "phi":
        return cmd_phi(args.n)
    raise AssertionError(f"unhandled subcommand {config.subcommand}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        subcommand=args.subcommand,
        range_max=getattr(args, "range_max", 0),
        workers=args.workers,
        fmt=getattr(args, "fmt", "plain"),
        checkpoint=getattr(args, "checkpoint", None),
        verbosity=args.verbose,
    )
    try:
        return run(config, args)
    except KeyboardInterrupt:
        print("interrupted; checkpointed progress is on disk", file=sys.stderr)
        return 130
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
