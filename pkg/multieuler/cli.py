"""Command-line entry point.

Results go to standard output, logs and error messages to standard error.
Exit codes: 0 on success, 1 when a verification suite fails (the report is
still printed) or a computed value breaks an integrality or sign invariant,
2 on a usage error or invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from . import __version__, config
from .analysis import positivity_report, real_root_certificate, symmetric_decompose
from .enumeration import dump_words
from .exceptions import (
    IntegralityException,
    MultiEulerException,
    NegativeEntryException,
)
from .families import family_center, family_polynomial, grammar_formal
from .logging_config import LEVELS, configure_logging
from .model.poly import UniPoly
from .recurrences import build_table, table_csv_rows
from .suites import suite_names, verify_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# a computed polynomial or table is wrong although the input was valid
INVARIANT_FAILURES = (IntegralityException, NegativeEntryException)


def _coeffs(f: UniPoly) -> List[str]:
    return [str(c) for c in f.int_coeffs()]


def _emit_json(payload: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps({"schema": config.JSON_SCHEMA_VERSION, **payload}) + "\n")


def _emit_csv(rows: Iterable[Tuple[str, int, int, Any]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(config.CSV_HEADER)
    for family, n, k, value in rows:
        writer.writerow((family, n, k, str(value)))


def _poly_rows(family: str, n: int, f: UniPoly) -> Iterable[Tuple[str, int, int, str]]:
    return ((family, n, k, c) for k, c in enumerate(_coeffs(f)))


def _cmd_compute(args: argparse.Namespace) -> int:
    if args.dump_words:
        for line in dump_words(
            config.WORD_FAMILY[args.family], args.n, cap_override=args.unsafe_cap_override
        ):
            sys.stdout.write(line + "\n")
        return EXIT_OK
    if args.dump_formal:
        formal = grammar_formal(args.family, args.n)
        _emit_json({"family": args.family, "n": args.n, "terms": formal.to_records()})
        return EXIT_OK

    f = family_polynomial(args.family, args.n, args.method, cap_override=args.unsafe_cap_override)
    if args.format == "json":
        _emit_json(
            {"family": args.family, "n": args.n, "method": args.method, "coeffs": _coeffs(f)}
        )
    elif args.format == "csv":
        _emit_csv(_poly_rows(args.family, args.n, f))
    else:
        sys.stdout.write(f"{args.family}_{args.n}(x) = {f}\n")
    return EXIT_OK


def _cmd_gamma(args: argparse.Namespace) -> int:
    f = family_polynomial(args.family, args.n, "rec")
    report = positivity_report(f, family_center(args.family, args.n))
    if args.format == "text":
        for key, value in report.to_dict().items():
            sys.stdout.write(f"{key}: {value}\n")
    else:
        _emit_json({"family": args.family, "n": args.n, **report.to_dict()})
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    f = family_polynomial(args.family, args.n, "rec")
    parts = symmetric_decompose(f, family_center(args.family, args.n))
    if args.format == "csv":
        _emit_csv([*_poly_rows(f"{args.family}_a", args.n, parts.a),
                   *_poly_rows(f"{args.family}_b", args.n, parts.b)])
    elif args.format == "text":
        sys.stdout.write(f"a(x) = {parts.a}\nb(x) = {parts.b}\n")
    else:
        _emit_json({
            "family": args.family,
            "n": args.n,
            "center": parts.center,
            "a": _coeffs(parts.a),
            "b": _coeffs(parts.b),
        })
    return EXIT_OK


def _cmd_roots(args: argparse.Namespace) -> int:
    f = family_polynomial(args.family, args.n, "rec")
    cert = real_root_certificate(f)
    payload = {
        "family": args.family,
        "n": args.n,
        "degree": cert.degree,
        "real_rooted": cert.is_real_rooted,
        "bound": f"{cert.bound.numerator}/{cert.bound.denominator}",
        "roots": cert.isolation.to_json(),
    }
    if args.format == "text":
        sys.stdout.write(f"{cert.isolation.root_count}/{cert.degree} real roots\n")
        for iv in payload["roots"]:
            sys.stdout.write(f"({iv['lo']}, {iv['hi']}) mult {iv['mult']}\n")
    else:
        _emit_json(payload)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    names = suite_names(args.suite)
    reports = verify_suites([(name, args.max_n) for name in names], workers=args.workers)
    passed = all(r.passed for r in reports)
    _emit_json({
        "passed": passed,
        "suites": [r.to_dict(timings=args.timings) for r in reports],
    })
    if not passed:
        failed = sum(len(r.failures) for r in reports)
        logger.warning(f"{failed} verification check(s) failed")
    return EXIT_OK if passed else EXIT_FAILED


def _cmd_export(args: argparse.Namespace) -> int:
    _emit_csv(table_csv_rows(build_table(args.table, args.max_n)))
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING",
                        choices=LEVELS,
                        help="Log level for the multieuler loggers (default: WARNING).")
    common.add_argument("--unsafe-cap-override", action="store_true",
                        help="Allow enumerations beyond the configured caps.")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", required=True, choices=config.AVAILABLE_FAMILIES)
    family.add_argument("--n", required=True, type=_positive_int)
    family.add_argument("--format", default="json", choices=config.AVAILABLE_FORMATS)

    parser = argparse.ArgumentParser(
        prog="multieuler",
        description="Descent polynomials of multiset and signed multiset permutations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common, family],
                             help="Build one family polynomial.")
    compute.add_argument("--method", default="rec", choices=config.AVAILABLE_METHODS)
    dump = compute.add_mutually_exclusive_group()
    dump.add_argument("--dump-formal", action="store_true",
                      help="Print the grammar iterate as coefficient records.")
    dump.add_argument("--dump-words", action="store_true",
                      help="Print the underlying words, one per line.")
    compute.set_defaults(handler=_cmd_compute)

    sub.add_parser("gamma", parents=[common, family],
                   help="Gamma and bi-gamma positivity report.").set_defaults(handler=_cmd_gamma)
    sub.add_parser(
        "decompose", parents=[common, family], help="Symmetric decomposition f = a + x b."
    ).set_defaults(handler=_cmd_decompose)
    sub.add_parser("roots", parents=[common, family],
                   help="Exact real-root isolation.").set_defaults(handler=_cmd_roots)

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites.")
    verify.add_argument("--suite", default="all", choices=("all",) + config.AVAILABLE_SUITES)
    verify.add_argument("--max-n", type=_positive_int, default=None,
                        help="Largest n checked; each suite has its own default.")
    verify.add_argument("--workers", type=_positive_int, default=1,
                        help="Run suites in this many processes.")
    verify.add_argument("--timings", action="store_true",
                        help="Include elapsed seconds in the report.")
    verify.set_defaults(handler=_cmd_verify)

    export = sub.add_parser("export", parents=[common], help="Export a table as CSV.")
    export.add_argument("--table", required=True, choices=config.AVAILABLE_TABLES)
    export.add_argument("--max-n", type=_positive_int, required=True)
    export.set_defaults(handler=_cmd_export)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(args.log_level)
    if getattr(args, "dump_formal", False) and args.method != "grammar":
        sys.stderr.write("error: --dump-formal needs --method grammar\n")
        return EXIT_USAGE
    if getattr(args, "dump_words", False) and args.method != "enum":
        sys.stderr.write("error: --dump-words needs --method enum\n")
        return EXIT_USAGE

    try:
        return args.handler(args)
    except INVARIANT_FAILURES as e:
        logger.error(f"{args.command}: computed value broke an invariant", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILED
    except MultiEulerException as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))
