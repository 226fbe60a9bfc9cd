"""
Regression Suite
The pinned set of vanishing and non-vanishing cases behind `paper-suite`:
baseline Wronskian value, Peano orthant checks, ternary Jacobi identity,
a complete inner under an incomplete outer of the same order, the d=1
Jacobi table, the d=2 incomplete-inner sweep, rho-scaled reruns
and the 1^d_y / 1^d_x counterexample.

Each case has a group name (what `--only` matches exactly) and a label
(matched by prefix).
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from app.config import VerifierSettings
from app.modules.algebra.polynomial import Polynomial
from app.modules.jacobi.certify import NONZERO, ZERO, certify_proportional, certify_zero
from app.modules.jets.classify import TheoremTag, classify_pair
from app.modules.jets.spec import (
    WronskianSpec,
    complete_spec,
    enumerate_specs,
    format_spec,
    make_spec,
    missing_top_count,
    parse_spec_text,
)
from app.modules.parser.expr_parser import parse_polynomial, render
from app.modules.reports import VerificationReport
from app.modules.wronskian.operator import WronskianOperator
from app.modules.wronskian.orthant import apply_orthant, format_sign_vector, peano_case
from app.utils.random_polys import make_rng, random_rho

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteCase:
    group: str
    label: str
    run: Callable[[VerifierSettings], VerificationReport]

    def selected(self, only: Optional[str]) -> bool:
        return only is None or self.group == only or self.label.startswith(only)


# =============================================================================
# CASE BUILDERS
# =============================================================================

def _expected_tag(outer: WronskianSpec, inner: WronskianSpec) -> TheoremTag:
    """Threshold rule for admissible pairs, senior (order, size) inner."""
    if (outer.order, outer.size) > (inner.order, inner.size):
        outer, inner = inner, outer
    if inner.is_complete:
        return TheoremTag.COMPLETE_COMPLETE if outer.is_complete else TheoremTag.COMPLETE_INNER
    if outer.size - 1 > missing_top_count(inner):
        return TheoremTag.ENOUGH_OUTER
    return TheoremTag.INSUFFICIENT_OUTER


def jacobi_case(
    group: str,
    label: str,
    outer: WronskianSpec,
    inner: WronskianSpec,
    expected_verdict: str = ZERO,
    expected_tag: Optional[TheoremTag] = None,
    rho_outer: Optional[Polynomial] = None,
    rho_inner: Optional[Polynomial] = None,
) -> SuiteCase:
    def run(settings: VerifierSettings) -> VerificationReport:
        certificate = certify_zero(
            WronskianOperator(outer, rho_outer),
            WronskianOperator(inner, rho_inner),
            guard=settings.guard,
            workers=settings.threads,
        )
        report = VerificationReport.from_certificate(
            label, outer.dimension, format_spec(outer), format_spec(inner), classify_pair(outer, inner), certificate
        )
        if rho_outer is not None:
            report.parameters["rho_outer"] = render(rho_outer)
        if rho_inner is not None:
            report.parameters["rho_inner"] = render(rho_inner)
        report.expected_verdict = expected_verdict
        if expected_tag is not None:
            report.expected_classification = expected_tag.value
        return report

    return SuiteCase(group, label, run)


def wronskian_value_case() -> SuiteCase:
    """W over rows {1, x} of (x, x^2) is x^2."""

    def run(settings: VerifierSettings) -> VerificationReport:
        spec = make_spec(1, [(0,), (1,)])
        start = time.perf_counter()
        args = [parse_polynomial("x", 1), parse_polynomial("x^2", 1)]
        value = WronskianOperator(spec)(*args)
        witnesses = [] if value.is_zero() else [{"args": [render(a) for a in args], "value": render(value)}]
        return VerificationReport(
            case_label="wronskian-baseline",
            d=1,
            outer_spec=format_spec(spec),
            inner_spec=None,
            classification=None,
            mode="evaluate",
            parameters={"args": ["x", "x^2"]},
            verdict=ZERO if value.is_zero() else NONZERO,
            certifying=True,
            witnesses=witnesses,
            elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
            expected_verdict=NONZERO,
            value=render(value),
            expected_value="x^2",
        )

    return SuiteCase("wronskian-baseline", "wronskian-baseline", run)


def peano_report(case: str) -> VerificationReport:
    """Orthant-wise Wronskian of a pinned Peano family."""
    spec, families = peano_case(case)
    start = time.perf_counter()
    values = apply_orthant(spec, families)
    witnesses = [
        {"args": [render(family.branch(signs)) for family in families], "value": render(value)}
        for signs, value in values.items()
        if not value.is_zero()
    ]
    verdict = NONZERO if witnesses else ZERO
    return VerificationReport(
        case_label=f"peano-{case}",
        d=spec.dimension,
        outer_spec=format_spec(spec),
        inner_spec=None,
        classification=None,
        mode="orthant",
        parameters={"orthants": {format_sign_vector(s): render(v) for s, v in values.items()}},
        verdict=verdict,
        certifying=True,
        witnesses=witnesses,
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
        expected_verdict=ZERO,
    )


def peano_suite_case(case: str) -> SuiteCase:
    return SuiteCase("peano", f"peano-{case}", lambda settings: peano_report(case))


def counterexample_specs():
    outer = make_spec(2, [(0, 0), (0, 1)])
    inner = make_spec(2, [(0, 0), (1, 0)])
    return outer, inner


def identity_case() -> SuiteCase:
    """(1^d_y)[1^d_x] equals 2 times the complete d=2 first-order Wronskian."""

    def run(settings: VerifierSettings) -> VerificationReport:
        outer, inner = counterexample_specs()
        reference = complete_spec(2, 1)
        certificate = certify_proportional(
            WronskianOperator(outer),
            WronskianOperator(inner),
            WronskianOperator(reference),
            factor=2,
            guard=settings.guard,
            workers=settings.threads,
        )
        report = VerificationReport.from_certificate(
            "identity-counterexample-2w", 2, format_spec(outer), format_spec(inner),
            classify_pair(outer, inner), certificate,
        )
        report.parameters["reference"] = f"2 * W[{format_spec(reference)}]"
        report.expected_verdict = ZERO
        return report

    return SuiteCase("identity", "identity-counterexample-2w", run)


# =============================================================================
# SUITE
# =============================================================================

def build_suite(settings: VerifierSettings, stretch: bool = False) -> List[SuiteCase]:
    cases: List[SuiteCase] = [wronskian_value_case(), peano_suite_case("1d"), peano_suite_case("2d")]

    first_order = complete_spec(2, 1)
    cases.append(jacobi_case("ternary", "ternary-jacobi", first_order, first_order,
                             expected_tag=TheoremTag.COMPLETE_COMPLETE))

    cases.append(jacobi_case(
        "complete-inner", "complete-inner-d2", parse_spec_text("1,x,y,xx", 2), complete_spec(2, 2),
        expected_tag=TheoremTag.COMPLETE_INNER,
    ))

    for k in range(1, 4):
        for l in range(1, 4):
            cases.append(jacobi_case(
                "table-d1", f"table-d1-k{k}-l{l}", complete_spec(1, k), complete_spec(1, l),
                expected_tag=TheoremTag.COMPLETE_COMPLETE,
            ))

    inners = enumerate_specs(2, 2, admissible_only=True)
    outers = [first_order] + (enumerate_specs(2, 2, admissible_only=True) if stretch else [])
    for outer in outers:
        for inner in inners:
            cases.append(jacobi_case(
                "sweep", f"sweep-d2 [{format_spec(outer)}] [{format_spec(inner)}]", outer, inner,
                expected_tag=_expected_tag(outer, inner),
            ))

    rng = make_rng(settings.seed)
    rho_targets = [(first_order, first_order)] + [(first_order, inner) for inner in inners[:3]]
    for i, (outer, inner) in enumerate(rho_targets):
        for side in ("outer", "inner"):
            rho = random_rho(rng, 2)
            cases.append(jacobi_case(
                "rho", f"rho-{side}-{i} [{format_spec(outer)}] [{format_spec(inner)}]", outer, inner,
                expected_tag=_expected_tag(outer, inner),
                rho_outer=rho if side == "outer" else None,
                rho_inner=rho if side == "inner" else None,
            ))

    outer, inner = counterexample_specs()
    cases.append(jacobi_case("counterexample", "counterexample", outer, inner,
                             expected_verdict=NONZERO, expected_tag=TheoremTag.NOT_COVERED))
    cases.append(identity_case())
    return cases


def run_suite(
    settings: VerifierSettings,
    only: Optional[str] = None,
    stretch: bool = False,
    on_report: Optional[Callable[[VerificationReport], None]] = None,
) -> List[VerificationReport]:
    """Runs every selected case in order; on_report sees each as it lands."""
    reports = []
    for case in build_suite(settings, stretch):
        if not case.selected(only):
            continue
        logger.info("running %s", case.label)
        report = case.run(settings)
        reports.append(report)
        if on_report is not None:
            on_report(report)
    return reports


def suite_passed(reports: Sequence[VerificationReport]) -> bool:
    return bool(reports) and all(r.matches_expectation for r in reports)
