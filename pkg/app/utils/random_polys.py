"""
Random Polynomial Helpers
Seed-deterministic random polynomials for randomized checks and
property tests. All randomness goes through numpy Generators.
"""

from typing import List, Optional

import numpy as np

from app.config import RANDOM_COEFF_RANGE
from app.modules.algebra.polynomial import Polynomial
from app.modules.jets.multi_index import enumerate_multi_indices


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_coefficient(rng: np.random.Generator, nonzero: bool = True) -> int:
    low, high = RANDOM_COEFF_RANGE
    while True:
        value = int(rng.integers(low, high + 1))
        if value or not nonzero:
            return value


def random_polynomial(
    rng: np.random.Generator,
    dimension: int,
    max_degree: int,
    max_terms: int = 4,
) -> Polynomial:
    """
    Sum of 1..max_terms monomials with per-variable degree <= max_degree
    and integer coefficients in RANDOM_COEFF_RANGE.
    """
    n_terms = int(rng.integers(1, max_terms + 1))
    terms = {}
    for _ in range(n_terms):
        exponents = tuple(int(e) for e in rng.integers(0, max_degree + 1, size=dimension))
        terms[exponents] = terms.get(exponents, 0) + random_coefficient(rng)
    return Polynomial(dimension, terms)


def random_polynomials(rng: np.random.Generator, count: int, dimension: int, max_degree: int) -> List[Polynomial]:
    return [random_polynomial(rng, dimension, max_degree) for _ in range(count)]


def random_rho(rng: np.random.Generator, dimension: int, degree: int = 2, max_terms: int = 3) -> Polynomial:
    """Nonzero prefactor of total degree <= degree."""
    monomials = enumerate_multi_indices(dimension, degree)
    while True:
        n_terms = int(rng.integers(1, max_terms + 1))
        terms = {}
        for _ in range(n_terms):
            exponents = monomials[int(rng.integers(0, len(monomials)))]
            terms[exponents] = terms.get(exponents, 0) + random_coefficient(rng)
        rho = Polynomial(dimension, terms)
        if not rho.is_zero():
            return rho
