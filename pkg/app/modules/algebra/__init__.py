"""
Exact Algebra Package
Rational coefficients and sparse polynomials in d variables.
"""

from fractions import Fraction as Rational

from .polynomial import (
    Monomial,
    Polynomial,
    add,
    derive_multi,
    factorial_product,
    grlex_key,
    is_zero,
    mul,
    partial,
)

__all__ = [
    "Rational",
    "Monomial",
    "Polynomial",
    "add",
    "mul",
    "partial",
    "derive_multi",
    "is_zero",
    "grlex_key",
    "factorial_product",
]
