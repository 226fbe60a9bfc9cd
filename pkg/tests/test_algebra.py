"""
Unit and property tests for exact polynomial arithmetic.
"""

import os
import sys
import unittest
from fractions import Fraction

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, strategies as st

from app.modules.algebra import Polynomial, Rational, add, derive_multi, factorial_product, is_zero, mul, partial
from app.modules.errors import DimensionMismatchError, InvalidAxisError
from app.modules.parser import parse_polynomial
from tests.strategies import PINNED, monomials, polynomials


def P(text, d=2):
    return parse_polynomial(text, d)


class TestRational(unittest.TestCase):
    """Scalars are stored reduced with a positive denominator."""

    def test_reduced(self):
        """Test that the sign moves to the numerator and the fraction is reduced."""
        value = Rational(6, -4)
        self.assertEqual((value.numerator, value.denominator), (-3, 2))

    def test_zero_is_unique(self):
        """Test that every zero scalar has denominator 1."""
        self.assertEqual(Rational(0, 7), Rational(0, 1))
        self.assertEqual(Rational(0, 7).denominator, 1)


class TestPolynomialBasics(unittest.TestCase):
    """Construction and canonical form."""

    def test_zero_coefficients_are_dropped(self):
        """Test that zero coefficients never reach the term map."""
        p = Polynomial(2, {(1, 0): 0, (0, 1): 3})
        self.assertEqual(p.terms, {(0, 1): Fraction(3)})

    def test_dimension_zero_rejected(self):
        """Test that a polynomial needs at least one variable."""
        with self.assertRaises(ValueError):
            Polynomial(0)

    def test_monomial_length_must_match(self):
        """Test that exponent tuples must have one entry per variable."""
        with self.assertRaises(DimensionMismatchError):
            Polynomial(2, {(1,): 1})

    def test_items_are_graded_lex(self):
        """Test that terms iterate by total degree, then lexicographically."""
        p = P("y^2 + x*y + x^2 + y + x + 1")
        order = [e for e, _ in p.items()]
        self.assertEqual(order, [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)])

    def test_equality_with_scalars(self):
        """Test that constants compare equal to plain numbers."""
        self.assertEqual(P("3"), 3)
        self.assertNotEqual(P("x"), 3)

    def test_degree(self):
        """Test total degree, with -1 for the zero polynomial."""
        self.assertEqual(P("x^2*y + y").degree(), 3)
        self.assertEqual(Polynomial.zero(2).degree(), -1)


class TestArithmetic(unittest.TestCase):
    """add, mul and division."""

    def test_additive_inverse(self):
        """Test that p + (-p) is zero."""
        self.assertTrue(is_zero(add(P("x"), P("-x"))))

    def test_add_like_terms(self):
        """Test that like terms merge."""
        self.assertEqual(add(P("x^2*y"), P("x^2*y")), P("2*x^2*y"))

    def test_add_rationals(self):
        """Test exact rational coefficient addition."""
        self.assertEqual(add(P("1/2*x"), P("1/3*x")), P("5/6*x"))

    def test_difference_of_squares(self):
        """Test that (x + y)(x - y) expands to x^2 - y^2."""
        self.assertEqual(mul(P("x + y"), P("x - y")), P("x^2 - y^2"))

    def test_mul_zero_and_one(self):
        """Test multiplication by the zero and unit polynomials."""
        p = P("3*x*y - 2")
        self.assertTrue(mul(p, Polynomial.zero(2)).is_zero())
        self.assertEqual(mul(p, Polynomial.constant(2, 1)), p)

    def test_dimension_mismatch(self):
        """Test that mixing dimensions raises."""
        with self.assertRaises(DimensionMismatchError):
            add(P("x", 1), P("x", 2))
        with self.assertRaises(DimensionMismatchError):
            mul(P("x", 1), P("x", 2))

    def test_power(self):
        """Test integer powers, including the zeroth."""
        self.assertEqual(P("x + 1") ** 2, P("x^2 + 2*x + 1"))
        self.assertEqual(P("x") ** 0, 1)

    def test_exact_divide(self):
        """Test division that leaves no remainder."""
        self.assertEqual(P("x^2 - y^2").exact_divide(P("x - y")), P("x + y"))
        self.assertEqual(P("4*x^2*y").exact_divide(P("2*x")), P("2*x*y"))

    def test_inexact_divide(self):
        """Test that a remainder or a zero divisor raises."""
        with self.assertRaises(ArithmeticError):
            P("x^2 + 1").exact_divide(P("x - y"))
        with self.assertRaises(ZeroDivisionError):
            P("x").exact_divide(Polynomial.zero(2))

    @PINNED
    @given(polynomials(2), polynomials(2), polynomials(2))
    def test_ring_axioms(self, p, q, r):
        """Test commutativity, associativity and distributivity."""
        self.assertEqual(p + q, q + p)
        self.assertEqual(p * q, q * p)
        self.assertEqual((p + q) + r, p + (q + r))
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * (q + r), p * q + p * r)

    @PINNED
    @given(polynomials(2, max_terms=3), polynomials(2, max_terms=3))
    def test_divide_product_back(self, p, q):
        """Test that (p * q) / q recovers p."""
        if q.is_zero():
            return
        self.assertEqual((p * q).exact_divide(q), p)


class TestCalculus(unittest.TestCase):
    """partial and derive_multi."""

    def test_partial_examples(self):
        """Test single partial derivatives on small examples."""
        self.assertEqual(partial(P("x^2*y"), 1), P("2*x*y"))
        self.assertTrue(partial(P("x^2"), 2).is_zero())
        self.assertEqual(partial(P("x^2 + 3*x"), 1), P("2*x + 3"))

    def test_invalid_axis(self):
        """Test that axes are 1-based and bounded by the dimension."""
        with self.assertRaises(InvalidAxisError):
            partial(P("x"), 3)
        with self.assertRaises(InvalidAxisError):
            partial(P("x"), 0)

    def test_derive_multi_examples(self):
        """Test multi-index derivatives of x^2 y^2."""
        p = P("x^2*y^2")
        self.assertEqual(derive_multi(p, (1, 1)), P("4*x*y"))
        self.assertEqual(derive_multi(p, (0, 0)), p)
        self.assertEqual(derive_multi(p, (2, 2)), P("4"))

    def test_derive_multi_length(self):
        """Test that the multi-index length must match the dimension."""
        with self.assertRaises(DimensionMismatchError):
            derive_multi(P("x"), (1,))

    @PINNED
    @given(polynomials(3), st.integers(1, 3), st.integers(1, 3))
    def test_partials_commute(self, p, a, b):
        """Test that mixed partials commute."""
        self.assertEqual(partial(partial(p, a), b), partial(partial(p, b), a))

    @PINNED
    @given(polynomials(2), polynomials(2), st.integers(1, 2))
    def test_leibniz(self, p, q, axis):
        """Test the product rule."""
        self.assertEqual(partial(p * q, axis), partial(p, axis) * q + p * partial(q, axis))

    @PINNED
    @given(polynomials(2), monomials(2, 2))
    def test_derive_matches_iterated_partials(self, p, sigma):
        """Test that derive_multi equals repeated single partials."""
        expected = p
        for axis, count in enumerate(sigma, start=1):
            for _ in range(count):
                expected = partial(expected, axis)
        self.assertEqual(derive_multi(p, sigma), expected)

    @PINNED
    @given(monomials(2, 3), monomials(2, 3))
    def test_monomial_triangularity(self, alpha, beta):
        """Test that the jet matrix of monomials is triangular at the origin."""
        value = derive_multi(Polynomial.monomial(beta), alpha)
        at_origin = value.coefficient((0, 0))
        if alpha == beta:
            self.assertEqual(value, factorial_product(beta))
        else:
            self.assertEqual(at_origin, 0)
        if any(a > b for a, b in zip(alpha, beta)):
            self.assertTrue(value.is_zero())


if __name__ == '__main__':
    unittest.main(verbosity=2)
