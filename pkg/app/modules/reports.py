"""
Reports Module
VerificationReport: the record printed (text or line-delimited JSON) for
every verify run and every paper-suite case.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from app.modules.jacobi.certify import NONZERO, Certificate, Witness
from app.modules.jets.classify import TheoremCase
from app.modules.parser.expr_parser import render


def render_witness(witness: Witness) -> Dict[str, Any]:
    return {
        "args": [render(arg) for arg in witness.args],
        "value": render(witness.value),
    }


@dataclass
class VerificationReport:
    """
    One verdict with its inputs echoed.

    `expected_verdict` is filled for paper-suite cases only; `experimental`
    marks verdicts on relaxed-validity specs.
    """

    case_label: str
    d: int
    outer_spec: Optional[str]
    inner_spec: Optional[str]
    classification: Optional[str]
    mode: str
    parameters: Dict[str, Any]
    verdict: str
    certifying: bool
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    tuples_checked: int = 0
    elapsed_ms: int = 0
    experimental: bool = False
    expected_verdict: Optional[str] = None
    expected_classification: Optional[str] = None
    value: Optional[str] = None
    expected_value: Optional[str] = None

    def __post_init__(self):
        if self.verdict == NONZERO and not self.witnesses:
            raise ValueError(f"{self.case_label}: a nonzero verdict needs at least one witness")

    @classmethod
    def from_certificate(
        cls,
        label: str,
        d: int,
        outer_spec: Optional[str],
        inner_spec: Optional[str],
        case: Optional[TheoremCase],
        certificate: Certificate,
        experimental: bool = False,
    ) -> "VerificationReport":
        if certificate.mode == "random":
            parameters = {
                "trials": certificate.trials,
                "max_degree": certificate.max_degree,
                "seed": certificate.seed,
            }
        else:
            parameters = {"M": certificate.basis_bound, "total_tuples": certificate.total_tuples}
        return cls(
            case_label=label,
            d=d,
            outer_spec=outer_spec,
            inner_spec=inner_spec,
            classification=case.tag.value if case is not None else None,
            mode=certificate.mode,
            parameters=parameters,
            verdict=certificate.verdict,
            certifying=certificate.certifying,
            witnesses=[render_witness(w) for w in certificate.witnesses],
            tuples_checked=certificate.tuples_checked,
            elapsed_ms=int(round(certificate.elapsed * 1000)),
            experimental=experimental,
        )

    @property
    def matches_expectation(self) -> bool:
        if self.expected_verdict is not None and self.verdict != self.expected_verdict:
            return False
        if self.expected_classification is not None and self.classification != self.expected_classification:
            return False
        if self.expected_value is not None and self.value != self.expected_value:
            return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        marker = "✓" if self.matches_expectation else "✗"
        lines = [f"{marker} {self.case_label}: {self.verdict}" + (" (experimental)" if self.experimental else "")]
        if self.outer_spec is not None:
            lines.append(f"    outer: {self.outer_spec}   inner: {self.inner_spec}   d={self.d}")
        if self.classification is not None:
            lines.append(f"    classification: {self.classification}")
        params = ", ".join(f"{key}={value}" for key, value in self.parameters.items() if value is not None)
        certifying = "certifying" if self.certifying else "non-certifying"
        lines.append(f"    mode: {self.mode} ({params}), {certifying}, {self.tuples_checked} tuples, {self.elapsed_ms} ms")
        if self.expected_verdict is not None and self.verdict != self.expected_verdict:
            lines.append(f"    expected verdict: {self.expected_verdict}")
        if self.expected_classification is not None and self.classification != self.expected_classification:
            lines.append(f"    expected classification: {self.expected_classification}")
        if self.value is not None:
            lines.append(f"    value: {self.value}")
        if self.expected_value is not None and self.value != self.expected_value:
            lines.append(f"    expected value: {self.expected_value}")
        for witness in self.witnesses:
            lines.append(f"    witness ({', '.join(witness['args'])}) -> {witness['value']}")
        return "\n".join(lines)


def exit_code_for(reports: Sequence[VerificationReport]) -> int:
    """0 when every verdict is zero, 3 if any is nonzero."""
    return 3 if any(report.verdict == NONZERO for report in reports) else 0


def summary_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    """One row per report, for the suite footer and the evaluation script."""
    rows = [
        {
            "case": r.case_label,
            "classification": r.classification or "-",
            "verdict": r.verdict,
            "expected": r.expected_verdict or "-",
            "ok": r.matches_expectation,
            "tuples": r.tuples_checked,
            "ms": r.elapsed_ms,
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=["case", "classification", "verdict", "expected", "ok", "tuples", "ms"])
