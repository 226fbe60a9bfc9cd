"""
Utility helpers shared by the CLI, the evaluation script and the tests.
"""

from .random_polys import make_rng, random_coefficient, random_polynomial, random_polynomials, random_rho
from .fixtures import load_polynomial_fixture

__all__ = [
    "make_rng",
    "random_coefficient",
    "random_polynomial",
    "random_polynomials",
    "random_rho",
    "load_polynomial_fixture",
]
