"""
Command-Line Entry Point
Wronskian Jacobi verifier: enumerate jet coordinates, evaluate generalized
Wronskians, certify Jacobi identities and run the regression suite.

Exit codes: 0 zero verdict / success, 1 usage or input error,
2 guard exceeded, 3 nonzero verdict (or suite mismatch).

Usage:
    python main.py enumerate --d 2 --k 2
    python main.py wronskian --d 1 --spec "1,x" --f x --f "x^2"
    python main.py verify --d 2 --outer "1,x,y" --inner "1,x,y"
    python main.py paper-suite [--only counterexample] [--stretch]
    python main.py peano --case 2d
    python main.py table --d 1 --max-order 3
"""

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

import pandas as pd

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.config import DEFAULT_GUARD, DEFAULT_SEED, DEFAULT_THREADS, DEFAULT_TRIALS, VerifierSettings
from app.modules.errors import GuardExceededError, InvalidSpecError, WronskianToolkitError
from app.modules.jacobi.certify import NONZERO, ZERO, certify_zero, random_check
from app.modules.jets.classify import classify_pair
from app.modules.jets.multi_index import enumerate_multi_indices, format_multi_index
from app.modules.jets.spec import (
    ADMISSIBILITY_CONDITION,
    complete_spec,
    enumerate_specs,
    format_spec,
    growth_chain,
    is_admissible,
    parse_spec_text,
)
from app.modules.regression_suite import peano_report, run_suite, suite_passed
from app.modules.parser.expr_parser import parse_polynomial, render
from app.modules.reports import VerificationReport, exit_code_for, summary_frame
from app.modules.wronskian.operator import WronskianOperator, apply, independence_witness
from app.utils.fixtures import load_polynomial_fixture

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_NONZERO = 3

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad command-line arguments (exit code 1)."""


class VerifierArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# =============================================================================
# OUTPUT HELPERS
# =============================================================================

def emit(settings: VerifierSettings, payload: dict, text: str) -> None:
    if settings.json_output:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def banner(title: str) -> None:
    print("=" * 60)
    print(f"       {title}")
    print("=" * 60)


def parse_optional_poly(text: Optional[str], d: int):
    return parse_polynomial(text, d) if text is not None else None


# =============================================================================
# SUBCOMMANDS
# =============================================================================

def cmd_enumerate(args, settings: VerifierSettings) -> int:
    """Multi-indices of order <= k; --specs / --chain list spec families instead."""
    if args.d < 1 or args.k < 0:
        raise UsageError("enumerate needs --d >= 1 and --k >= 0")
    if args.specs or args.chain:
        specs = growth_chain(args.d, args.k) if args.chain else enumerate_specs(args.d, args.k)
        words = [format_spec(spec) for spec in specs]
        emit(settings, {"d": args.d, "k": args.k, "specs": words, "count": len(words)},
             "\n".join(words + [f"count: {len(words)}"]))
        return EXIT_OK
    indices = enumerate_multi_indices(args.d, args.k)
    words = [format_multi_index(sigma) for sigma in indices]
    emit(
        settings,
        {"d": args.d, "k": args.k, "indices": [list(s) for s in indices], "words": words, "count": len(words)},
        "\n".join(words + [f"count: {len(words)}"]),
    )
    return EXIT_OK


def cmd_wronskian(args, settings: VerifierSettings) -> int:
    spec = parse_spec_text(args.spec, args.d)
    functions = [parse_polynomial(text, args.d) for text in (args.f or [])]
    if args.f_file:
        functions.extend(load_polynomial_fixture(args.f_file, args.d))
    op = WronskianOperator(spec, parse_optional_poly(args.rho, args.d))
    value = apply(op, functions)
    payload = {
        "d": args.d,
        "spec": format_spec(spec),
        "args": [render(f) for f in functions],
        "rho": render(op.rho) if op.rho is not None else None,
        "value": render(value),
    }
    text = render(value)
    if args.independence:
        verdict, _ = independence_witness(spec, functions)
        payload["independence"] = verdict
        text += f"\n{verdict}"
    emit(settings, payload, text)
    return EXIT_OK


def _strict_check(spec, role: str) -> None:
    if not is_admissible(spec):
        raise InvalidSpecError(
            f"{role} spec {format_spec(spec)} is not admissible: {ADMISSIBILITY_CONDITION} "
            "(pass --allow-inadmissible to run it anyway)",
            ADMISSIBILITY_CONDITION,
        )


def cmd_verify(args, settings: VerifierSettings) -> int:
    outer_spec = parse_spec_text(args.outer, args.d, relaxed=args.relaxed_validity)
    inner_spec = parse_spec_text(args.inner, args.d, relaxed=args.relaxed_validity)
    if not args.allow_inadmissible:
        _strict_check(outer_spec, "outer")
        _strict_check(inner_spec, "inner")

    outer = WronskianOperator(outer_spec, parse_optional_poly(args.rho_outer, args.d))
    inner = WronskianOperator(inner_spec, parse_optional_poly(args.rho_inner, args.d))
    case = classify_pair(outer_spec, inner_spec)

    if args.random:
        degree = args.degree if args.degree is not None else outer.order + inner.order
        certificate = random_check(outer, inner, args.trials, degree, seed=settings.seed)
    else:
        certificate = certify_zero(outer, inner, guard=settings.guard, workers=settings.threads)

    report = VerificationReport.from_certificate(
        "verify", args.d, format_spec(outer_spec), format_spec(inner_spec), case, certificate,
        experimental=args.relaxed_validity,
    )
    if outer.rho is not None:
        report.parameters["rho_outer"] = render(outer.rho)
    if inner.rho is not None:
        report.parameters["rho_inner"] = render(inner.rho)
    emit(settings, report.to_dict(), report.to_text())
    return exit_code_for([report])


def cmd_paper_suite(args, settings: VerifierSettings) -> int:
    if not settings.json_output:
        banner("Wronskian Jacobi regression suite")

    def show(report: VerificationReport) -> None:
        print(report.to_json() if settings.json_output else report.to_text())

    reports = run_suite(settings, only=args.only, stretch=args.stretch, on_report=show)
    if not reports:
        raise UsageError(f"--only {args.only!r} matches no suite case")

    passed = suite_passed(reports)
    if not settings.json_output:
        print("-" * 60)
        print(summary_frame(reports).to_string(index=False))
        print("-" * 60)
        failed = sum(1 for r in reports if not r.matches_expectation)
        if passed:
            print(f"✓ All {len(reports)} cases match their expected verdicts")
        else:
            print(f"✗ {failed} of {len(reports)} cases mismatch")
    return EXIT_OK if passed else EXIT_NONZERO


def cmd_peano(args, settings: VerifierSettings) -> int:
    report = peano_report(args.case)
    if settings.json_output:
        print(report.to_json())
    else:
        print(f"W[{report.outer_spec}] on the case-{args.case} family, per open orthant:")
        for signs, value in report.parameters["orthants"].items():
            print(f"    {signs}: {value}")
        print(f"verdict: {report.verdict}")
    return EXIT_OK if report.verdict == ZERO else EXIT_NONZERO


def cmd_table(args, settings: VerifierSettings) -> int:
    """Certified verdicts W_k[W_l] for all complete pairs 1 <= k, l <= max_order."""
    if args.d < 1 or args.max_order < 1:
        raise UsageError("table needs --d >= 1 and --max-order >= 1")
    orders = range(1, args.max_order + 1)
    grid = pd.DataFrame(index=[f"k={k}" for k in orders], columns=[f"l={l}" for l in orders], dtype=object)
    any_nonzero = False
    for k in orders:
        for l in orders:
            outer = WronskianOperator(complete_spec(args.d, k))
            inner = WronskianOperator(complete_spec(args.d, l))
            try:
                verdict = certify_zero(outer, inner, guard=settings.guard, workers=settings.threads).verdict
            except GuardExceededError:
                verdict = "guard"
            any_nonzero = any_nonzero or verdict == NONZERO
            grid.loc[f"k={k}", f"l={l}"] = verdict
    if settings.json_output:
        print(json.dumps({"d": args.d, "table": grid.to_dict(orient="index")}, sort_keys=True))
    else:
        print(f"Jacobi table, complete Wronskians over d={args.d} (rows: outer order, columns: inner order)")
        print(grid.to_string())
    return EXIT_NONZERO if any_nonzero else EXIT_OK


# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def _global_options() -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand."""
    common = VerifierArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Line-delimited JSON output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=f"Random seed (default {DEFAULT_SEED})")
    common.add_argument("--guard", type=int, default=argparse.SUPPRESS,
                        help=f"Max shuffle-term evaluations for certification (default {DEFAULT_GUARD})")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help=f"Worker processes for certification (default {DEFAULT_THREADS})")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = VerifierArgumentParser(
        prog="wronskian-verifier", description="Generalized Wronskians and their Jacobi identities", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", parser_class=VerifierArgumentParser)

    p = sub.add_parser("enumerate", parents=[common], help="List multi-indices of order <= k")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--specs", action="store_true", help="List every valid spec of order k")
    group.add_argument("--chain", action="store_true", help="List the growth chain up to order k")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("wronskian", parents=[common], help="Evaluate a generalized Wronskian")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--spec", required=True, help='Row multi-indices, e.g. "1,x,y"')
    p.add_argument("--f", action="append", help="Argument polynomial (repeat per argument)")
    p.add_argument("--f-file", help="Fixture file, one polynomial per line")
    p.add_argument("--rho", help="Prefactor polynomial")
    p.add_argument("--independence", action="store_true", help="Also report the linear-independence verdict")
    p.set_defaults(handler=cmd_wronskian)

    p = sub.add_parser("verify", parents=[common], help="Certify that W_out[W_in] vanishes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--rho-outer")
    p.add_argument("--rho-inner")
    p.add_argument("--random", action="store_true", help="Randomized pre-screen instead of certification")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--degree", type=int, help="Per-variable degree of random arguments (default k_out + l_in)")
    p.add_argument("--allow-inadmissible", action="store_true")
    p.add_argument("--relaxed-validity", action="store_true", help="Experimental: allow gaps above order 1")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("paper-suite", parents=[common], help="Run the pinned regression suite")
    p.add_argument("--only", help="Run one group, or cases whose label starts with this prefix")
    p.add_argument("--stretch", action="store_true", help="Add the k=2 outer sweep and the complete (2,2) pair")
    p.set_defaults(handler=cmd_paper_suite)

    p = sub.add_parser("peano", parents=[common], help="Orthant-wise Wronskians of the Peano families")
    p.add_argument("--case", choices=["1d", "2d"], required=True)
    p.set_defaults(handler=cmd_peano)

    p = sub.add_parser("table", parents=[common], help="Jacobi table of complete Wronskians")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-order", type=int, default=3)
    p.set_defaults(handler=cmd_table)

    return parser


# =============================================================================
# MAIN
# =============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one subcommand and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if getattr(args, "handler", None) is None:
            raise UsageError("a subcommand is required")
    except UsageError as e:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(f"⚠ Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    settings = VerifierSettings.from_args(args)
    logging.basicConfig(
        level=logging.DEBUG if settings.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("settings: %s", settings)
    try:
        return args.handler(args, settings)
    except GuardExceededError as e:
        print(f"⚠ Guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, WronskianToolkitError, ValueError, OSError) as e:
        print(f"⚠ Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
