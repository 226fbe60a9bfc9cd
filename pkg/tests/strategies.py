"""
Hypothesis strategies shared by the property tests.
"""

from fractions import Fraction

from hypothesis import settings, strategies as st

from app.modules.algebra.polynomial import Polynomial

# Seed-pinned profile used by every property test
PINNED = settings(max_examples=100, deadline=None, derandomize=True)


def coefficients(max_denominator: int = 6):
    return st.fractions(min_value=-9, max_value=9, max_denominator=max_denominator)


def monomials(dimension: int, max_degree: int = 3):
    return st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * dimension)


def polynomials(dimension: int, max_degree: int = 3, max_terms: int = 4, integer: bool = False):
    coeff = st.integers(min_value=-9, max_value=9) if integer else coefficients()
    return st.dictionaries(monomials(dimension, max_degree), coeff, max_size=max_terms).map(
        lambda terms: Polynomial(dimension, terms)
    )


def dimensioned_polynomials(max_dimension: int = 4):
    """(d, p) pairs over random dimensions 1..max_dimension."""
    return st.integers(min_value=1, max_value=max_dimension).flatmap(
        lambda d: st.tuples(st.just(d), polynomials(d))
    )


def polynomial_lists(dimension: int, size: int, max_degree: int = 3):
    return st.lists(polynomials(dimension, max_degree, integer=True), min_size=size, max_size=size)


def scalars():
    return coefficients().filter(lambda c: c != Fraction(0))
