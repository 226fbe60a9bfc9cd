"""
Application Modules Package
Exact algebra, parsing, jet combinatorics, Wronskian operators and the
Jacobiator certifier.
"""

from app.modules.algebra import Polynomial, Rational
from app.modules.parser import parse_polynomial, render
from app.modules.jets import WronskianSpec, classify_pair, make_spec, parse_spec_text
from app.modules.wronskian import WronskianOperator, apply
from app.modules.jacobi import certify_zero, insertion_action, random_check

__all__ = [
    "Polynomial",
    "Rational",
    "parse_polynomial",
    "render",
    "WronskianSpec",
    "classify_pair",
    "make_spec",
    "parse_spec_text",
    "WronskianOperator",
    "apply",
    "certify_zero",
    "insertion_action",
    "random_check",
]
