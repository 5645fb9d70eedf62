"""
Command-line front end.

    qrrt expand "poch(q;q;3)" --order 10
    qrrt verify rr1 --order 100
    qrrt catalog --all --jobs 4 --json reports.json
    qrrt bailey --d 2 --k 4 --nmax 20
    qrrt qdiff --d 3 --k 5
    qrrt partitions --d 2 --k 3 --i 3 --nmax 4
    qrrt list

Results go to stdout; diagnostics go through logging to stderr. The exit
code is 0 when every check passes, 1 when one fails and 2 on a usage
error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .bailey import SUPPORTED_PAIRS, DKParams, Transform, verify_bailey_pair, verify_insertion
from .core.exceptions import CatalogError, ParseError, QSeriesError, UnsupportedParams, ValidationError
from .core.series import Orders, format_series
from .dsl.catalog import find_entry, load_catalog
from .dsl.evaluator import evaluate
from .dsl.parser import parse_expression
from .partitions import PartitionConstraint, verify_gordon_theorem, verify_refined
from .qdiff import (
    SUPPORTED_FAMILIES,
    FamilyIndex,
    verify_alternate,
    verify_at_zero,
    verify_f_equals_q,
    verify_f_system,
    verify_product_side,
    verify_q_system,
)
from .utils import config
from .verification.pipeline import CatalogPipeline, run_entry
from .verification.report import VerificationReport, emit_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Arguments that parse but make no sense together."""


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging")
    common.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS, help="errors only, no progress bar")

    parser = argparse.ArgumentParser(
        prog="qrrt",
        description="Exact verification of Rogers-Ramanujan-type q-series identities.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", default=False, help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", default=False, help="errors only, no progress bar")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    expand = sub.add_parser("expand", parents=[common], help="print the coefficients of an expression")
    expand.add_argument("expression")
    expand.add_argument("--order", type=_non_negative, required=True, help="q truncation order")
    expand.add_argument("--a-order", type=_non_negative, help="a truncation order")

    verify = sub.add_parser("verify", parents=[common], help="verify one catalog entry")
    verify.add_argument("target", help="entry name or path to a .qid file")
    verify.add_argument("--order", type=_non_negative, help="q truncation order")
    verify.add_argument("--a-order", type=_non_negative, help="a truncation order (bivariate entries)")
    verify.add_argument("--json", type=Path, help="write the report document here")

    catalog = sub.add_parser("catalog", parents=[common], help="verify catalog entries")
    catalog.add_argument("names", nargs="*", help="entry names (with no --all)")
    catalog.add_argument("--all", action="store_true", help="every entry of the catalog")
    catalog.add_argument("--order", type=_non_negative, help="q truncation order")
    catalog.add_argument("--a-order", type=_non_negative, help="a truncation order (bivariate entries)")
    catalog.add_argument("--jobs", type=_positive, help="worker processes (default: CPU count)")
    catalog.add_argument("--json", type=Path, help="write the report document here")
    catalog.add_argument("--directory", type=Path, help="catalog directory")

    bailey = sub.add_parser("bailey", parents=[common], help="definitional against closed-form beta")
    bailey.add_argument("--d", type=_positive, required=True)
    bailey.add_argument("--k", type=_positive, required=True)
    bailey.add_argument("--nmax", type=_non_negative, required=True)
    bailey.add_argument("--order", type=_non_negative, default=config.DEFAULT_BIVARIATE_Q_ORDER)
    bailey.add_argument("--a-order", type=_non_negative, default=config.DEFAULT_A_ORDER)
    bailey.add_argument(
        "--insert",
        choices=[t.value for t in Transform],
        action="append",
        default=[],
        help="also check this corollary of Bailey's lemma (repeatable)",
    )

    qdiff = sub.add_parser("qdiff", parents=[common], help="q-difference systems of the Q and F families")
    qdiff.add_argument("--d", type=_positive, required=True)
    qdiff.add_argument("--k", type=_positive, required=True)
    qdiff.add_argument("--order", type=_non_negative, default=config.DEFAULT_BIVARIATE_Q_ORDER)
    qdiff.add_argument("--a-order", type=_non_negative, default=config.DEFAULT_A_ORDER)

    partitions = sub.add_parser("partitions", parents=[common], help="A against B partition counts")
    partitions.add_argument("--d", type=_positive, required=True)
    partitions.add_argument("--k", type=_positive, required=True)
    partitions.add_argument("--i", type=_positive, required=True)
    partitions.add_argument("--nmax", type=_non_negative, required=True)
    partitions.add_argument("--refined", action="store_true", help="also compare b(m, n) with Q_{d,k,i}")
    partitions.add_argument(
        "--a-order",
        type=_non_negative,
        default=min(config.DEFAULT_A_ORDER, config.MAX_PARTITION_PARTS),
        help="a truncation order of the refined check",
    )

    sub.add_parser("list", parents=[common], help="catalog names and labels")
    return parser


def _print_reports(reports: Sequence[VerificationReport]) -> int:
    for report in reports:
        print(report.describe())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _write_json(path: Optional[Path], reports: Sequence[VerificationReport]) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_json(reports) + "\n", encoding="utf-8")
    logger.info(f"Wrote {len(reports)} report(s) to {path}")


def _cmd_expand(args: argparse.Namespace) -> int:
    try:
        node = parse_expression(args.expression)
    except (ParseError, ValidationError) as e:
        raise UsageError(str(e)) from e
    print(format_series(evaluate(node, args.order, args.a_order)))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        entry = find_entry(args.target)
    except CatalogError as e:
        raise UsageError(str(e)) from e
    report = run_entry(entry, args.order, args.a_order)
    _write_json(args.json, [report])
    return _print_reports([report])


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.all == bool(args.names):
        raise UsageError("give either --all or one or more entry names")
    pipeline = CatalogPipeline(
        q_order=args.order,
        a_order=args.a_order,
        jobs=args.jobs,
        show_progress=not args.quiet and sys.stderr.isatty(),
        directory=args.directory,
    )
    try:
        reports = pipeline.run(None if args.all else args.names)
    except CatalogError as e:
        raise UsageError(str(e)) from e
    _write_json(args.json, reports)
    code = _print_reports(reports)
    passed = sum(1 for r in reports if r.passed)
    print(f"{passed}/{len(reports)} entries pass")
    return code


def _cmd_bailey(args: argparse.Namespace) -> int:
    params = DKParams(args.d, args.k)
    orders = Orders(args.order, args.a_order)
    if (params.d, params.k) not in SUPPORTED_PAIRS:
        supported = ", ".join(f"({d},{k})" for d, k in SUPPORTED_PAIRS)
        raise UsageError(f"(d,k)={params} is not one of {supported}")
    try:
        reports: List[VerificationReport] = [verify_bailey_pair(params, args.nmax, orders)]
    except UnsupportedParams as e:
        raise UsageError(str(e)) from e
    for transform in args.insert:
        reports.append(verify_insertion(Transform(transform), params, orders))
    return _print_reports(reports)


def _cmd_qdiff(args: argparse.Namespace) -> int:
    d, k = args.d, args.k
    orders = Orders(args.order, args.a_order)
    reports = [verify_q_system(d, k, orders), verify_at_zero(d, k, orders), verify_alternate(d, k, orders)]
    if (d, k) in SUPPORTED_FAMILIES:
        reports.append(verify_f_system(d, k, orders))
        reports.append(verify_f_equals_q(d, k, orders))
    else:
        logger.info(f"No closed-form F family for ({d},{k}); checking Q only")
    for i in range(1, k + 1):
        reports.append(verify_product_side(FamilyIndex(d, k, i), args.order))
    return _print_reports(reports)


def _cmd_partitions(args: argparse.Namespace) -> int:
    try:
        c = PartitionConstraint(args.d, args.k, args.i)
        report, rows = verify_gordon_theorem(c, args.nmax)
        reports = [report]
        if args.refined:
            reports.append(verify_refined(c, Orders(args.nmax, args.a_order)))
    except ValueError as e:
        raise UsageError(str(e)) from e
    for row in rows:
        print(row)
    return _print_reports(reports)


def _cmd_list(args: argparse.Namespace) -> int:
    for name, entry in load_catalog().items():
        print(f"{name:16} {entry.label}")
    return EXIT_OK


COMMANDS = {
    "expand": _cmd_expand,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
    "bailey": _cmd_bailey,
    "qdiff": _cmd_qdiff,
    "partitions": _cmd_partitions,
    "list": _cmd_list,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run the subcommand and return the exit code.

    Returns:
        0 if every check passed, 1 if one failed, 2 on a usage error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config.configure_logging(config.log_level(verbose=args.verbose, quiet=args.quiet))
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"qrrt {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except QSeriesError as e:
        logger.error(f"✗ {args.command} failed: {type(e).__name__}: {e}")
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
