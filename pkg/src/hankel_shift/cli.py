"""
Command-line front end: `hankel-shift seq|hankel|recurrence|verify`.

Spec strings follow the grammar of `hankel_shift.sequences.grammar`:

    [shift0: | shiftA=p/q:] [(2^(A)-1)* | (A)*] FAMILY[A] [/A! | /(A)!]

where FAMILY is one of B, Bx, E, Ex, E1, Ehalf, Bhalf and A is an affine
index such as k, 2k+1 or 2k-2.

Exit status is 0 on success, 1 when a verification fails or a computation
hits a degenerate Hankel determinant, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from .config import Settings
from .errors import (
    CheckerboardPatternError,
    ConsistencyError,
    HankelDegeneracyError,
    HankelShiftError,
    InexactDivisionError,
    InsufficientCoefficientsError,
)
from .exact.matrix import format_entry
from .hankel import hankel_det
from .identities.propositions import PROPOSITION_IDS, verify_all, verify_proposition
from .identities.report import RECORD_COLUMNS, VerificationReport
from .orthopoly.recurrence import ThreeTermRecurrence, extract_recurrence
from .orthopoly.tags import TAGS, tag_spec, tagged_recurrence
from .sequences.grammar import format_spec, parse_spec
from .sequences.spec import SequenceSpec
from .utils.formats import OutputFormat
from .version import get_package_version
from .writers import Table, writer_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Raised by a computation rather than by bad input; these exit with EXIT_FAILURE.
COMPUTATION_ERRORS = (
    HankelDegeneracyError,
    ConsistencyError,
    InexactDivisionError,
    InsufficientCoefficientsError,
    CheckerboardPatternError,
    ZeroDivisionError,
)

TAG_PREFIX = "tag:"


class UsageError(Exception):
    """Bad command-line input detected after argparse accepted it."""


def _parse_range(text: str) -> Tuple[int, int]:
    """Inclusive range "a..b"; a bare "b" means 0..b."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            start, stop = int(low), int(high)
        else:
            start, stop = 0, int(text)
    except ValueError as e:
        raise UsageError(f"Invalid range '{text}', expected a..b") from e
    if start < 0 or stop < start:
        raise UsageError(f"Invalid range '{text}', need 0 <= a <= b")
    return start, stop


def _depth(args: argparse.Namespace, settings: Settings) -> int:
    if args.n is not None:
        return args.n
    if args.nmax is not None:
        return args.nmax
    return settings.nmax_default


def _emit(table: Table, args: argparse.Namespace, stream: TextIO) -> None:
    writer_for(OutputFormat.from_flag(args.format)).write(table, stream)


def cmd_seq(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    spec = parse_spec(args.spec)
    start, stop = _parse_range(args.range)
    table = Table(["k", "term"])
    for k in range(start, stop + 1):
        table.add_row(k, format_entry(spec.term(k)))
    if OutputFormat.from_flag(args.format) == OutputFormat.TEXT:
        table = table.select("term")
    _emit(table, args, stream)
    return EXIT_OK


def cmd_hankel(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    spec = parse_spec(args.spec)
    n = _depth(args, settings)
    value = format_entry(hankel_det(spec, n))
    table = Table(["spec", "n", "det"], [(format_spec(spec), n, value)])
    if OutputFormat.from_flag(args.format) == OutputFormat.TEXT:
        table = table.select("det")
    _emit(table, args, stream)
    return EXIT_OK


def _resolve_recurrence_target(target: str) -> Tuple[SequenceSpec, Optional[str]]:
    if target.startswith(TAG_PREFIX):
        tag = target[len(TAG_PREFIX):]
        return tag_spec(tag), tag
    return parse_spec(target), None


def _coefficient(rec: ThreeTermRecurrence, which: str, n: int) -> str:
    if which == "t" and n == 0:
        return ""
    return format_entry(rec.s_at(n) if which == "s" else rec.t_at(n))


def cmd_recurrence(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    spec, tag = _resolve_recurrence_target(args.target)
    n_max = _depth(args, settings)
    extracted = extract_recurrence(spec, n_max)

    if tag is None:
        table = Table(["n", "s", "t"])
        for n in range(n_max + 1):
            table.add_row(n, _coefficient(extracted, "s", n), _coefficient(extracted, "t", n))
        _emit(table, args, stream)
        return EXIT_OK

    closed = tagged_recurrence(tag, n_max)
    table = Table(["n", "s", "t", "s_tag", "t_tag", "match"])
    all_match = True
    for n in range(n_max + 1):
        match = extracted.s_at(n) == closed.s_at(n) and (n == 0 or extracted.t_at(n) == closed.t_at(n))
        all_match = all_match and match
        table.add_row(
            n,
            _coefficient(extracted, "s", n),
            _coefficient(extracted, "t", n),
            _coefficient(closed, "s", n),
            _coefficient(closed, "t", n),
            match,
        )
    _emit(table, args, stream)
    return EXIT_OK if all_match else EXIT_FAILURE


def _record_table(reports: Sequence[VerificationReport], failures_only: bool) -> Table:
    table = Table(list(RECORD_COLUMNS))
    for report in reports:
        for record in report.records:
            if failures_only and record.equal:
                continue
            table.add_row(
                record.proposition,
                record.n,
                record.part,
                format_entry(record.lhs),
                format_entry(record.rhs),
                record.equal,
            )
    return table


def _record_lines(reports: Sequence[VerificationReport], failures_only: bool) -> Table:
    table = Table(["id", "n", "part", "status", "lhs", "rhs"], header=False)
    for report in reports:
        for record in report.records:
            if failures_only and record.equal:
                continue
            table.add_row(
                record.proposition,
                f"n={record.n}",
                record.part,
                "PASS" if record.equal else "FAIL",
                format_entry(record.lhs),
                format_entry(record.rhs),
            )
    return table


def cmd_verify(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    n_max = _depth(args, settings)
    jobs = args.jobs if args.jobs is not None else settings.jobs
    if args.id == "all":
        reports = verify_all(PROPOSITION_IDS, n_max, jobs)
    else:
        reports = [verify_proposition(args.id, n_max)]

    output_format = OutputFormat.from_flag(args.format)
    if output_format != OutputFormat.TEXT:
        table = _record_table(reports, args.quiet)
    elif args.id == "all":
        table = Table(["summary"])
        for report in reports:
            if not (args.quiet and report.passed):
                table.add_row(report.summary())
    else:
        table = _record_lines(reports, args.quiet)
    _emit(table, args, stream)
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILURE


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        default="text",
        choices=["text", "jsonl", "json-lines", "csv"],
        help="Output format (default: text)",
    )
    common.add_argument("--nmax", type=int, help="Default depth when n is not given")
    common.add_argument("--jobs", type=int, help="Worker threads for 'verify all'")
    common.add_argument("--quiet", action="store_true", help="Only report errors and failures")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="hankel-shift",
        description="Exact Hankel determinants of Bernoulli/Euler sequences and their shifts.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {get_package_version()}"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    seq = commands.add_parser("seq", parents=[common], help="Print terms of a sequence")
    seq.add_argument("spec", help='Sequence spec, e.g. "B[2k]"')
    seq.add_argument("range", help="Index range a..b")
    seq.set_defaults(handler=cmd_seq)

    hankel = commands.add_parser("hankel", parents=[common], help="Print H_n of a sequence")
    hankel.add_argument("spec", help='Sequence spec, e.g. "E1[2k+1]"')
    hankel.add_argument("n", type=int, nargs="?", help="Order n of H_n")
    hankel.set_defaults(handler=cmd_hankel)

    recurrence = commands.add_parser(
        "recurrence",
        parents=[common],
        help="Print the three-term recurrence coefficients of a sequence",
        description="TARGET is a spec string or tag:TAG; known tags: " + ", ".join(TAGS),
    )
    recurrence.add_argument("target", help='Spec string or "tag:NAME"')
    recurrence.add_argument("n", type=int, nargs="?", help="Largest n of s_n, t_n")
    recurrence.set_defaults(handler=cmd_recurrence)

    verify = commands.add_parser("verify", parents=[common], help="Verify a proposition")
    verify.add_argument("id", choices=PROPOSITION_IDS + ["all"], help="Proposition id or 'all'")
    verify.add_argument("n", type=int, nargs="?", help="Largest n to check")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    _configure_logging(args)
    logger.debug("Running %s with %s", args.command, vars(args))
    try:
        settings = Settings.from_env()
        return args.handler(args, settings, sys.stdout)
    except COMPUTATION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (HankelShiftError, UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
