"""
Tests for determinants, Wronskian operators and orthant evaluation.
"""

import os
import sys
import unittest

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, strategies as st

from app.modules.algebra import Polynomial
from app.modules.errors import ArityMismatchError, DimensionMismatchError, MatrixShapeError
from app.modules.jets import complete_spec, enumerate_specs, parse_spec_text
from app.modules.parser import parse_polynomial
from app.modules.wronskian import (
    INCONCLUSIVE,
    INDEPENDENT,
    OrthantFamily,
    WronskianOperator,
    apply,
    apply_orthant,
    det_bareiss,
    det_laplace,
    independence_witness,
    peano_case,
    sign_vectors,
)
from tests.strategies import PINNED, polynomial_lists, polynomials, scalars


def P(text, d=2):
    return parse_polynomial(text, d)


def W(text, d=2, rho=None):
    return WronskianOperator(parse_spec_text(text, d), rho)


def matrices(max_size=6):
    """Square polynomial matrices with some zero entries, to exercise pivoting."""
    entry = st.one_of(st.just(Polynomial.zero(2)), polynomials(2, max_degree=2, max_terms=2, integer=True))
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestDeterminants(unittest.TestCase):

    def test_shape_errors(self):
        """Test that empty, ragged and oversized matrices are refused."""
        with self.assertRaises(MatrixShapeError):
            det_bareiss([])
        with self.assertRaises(MatrixShapeError):
            det_bareiss([[P("1"), P("x")]])
        with self.assertRaises(MatrixShapeError):
            det_laplace([[P("1")] * 9 for _ in range(9)])

    def test_zero_pivot_swap(self):
        """Test that a zero pivot triggers a row swap and flips the sign."""
        zero, one = P("0"), P("1")
        matrix = [[zero, one, zero], [one, zero, zero], [zero, zero, one]]
        self.assertEqual(det_bareiss(matrix), -1)

    def test_singular(self):
        """Test that a repeated row gives a zero determinant."""
        row = [P("x"), P("y"), P("x*y")]
        self.assertTrue(det_bareiss([row, row, [P("1"), P("2"), P("3")]]).is_zero())

    @PINNED
    @given(matrices())
    def test_bareiss_matches_laplace(self, matrix):
        """Test the fraction-free determinant against cofactor expansion."""
        self.assertEqual(det_bareiss(matrix), det_laplace(matrix))


class TestWronskianOperator(unittest.TestCase):

    def test_baseline_value(self):
        """Test that W[1, d_x](x, x^2) = x^2."""
        self.assertEqual(apply(W("1,x", 1), [P("x", 1), P("x^2", 1)]), P("x^2", 1))

    def test_first_order_basis(self):
        """Test the first-order basis with and without a rho prefactor."""
        args = [P("1"), P("x"), P("y")]
        self.assertEqual(apply(W("1,x,y"), args), 1)
        self.assertEqual(apply(W("1,x,y", rho=P("x")), args), P("x"))

    def test_arity_and_dimension_checks(self):
        """Test argument count and dimension validation."""
        with self.assertRaises(ArityMismatchError):
            apply(W("1,x,y"), [P("1"), P("x")])
        with self.assertRaises(DimensionMismatchError):
            apply(W("1,x", 1), [P("1"), P("x")])
        with self.assertRaises(DimensionMismatchError):
            WronskianOperator(complete_spec(2, 1), P("x", 1))

    def test_describe(self):
        """Test the wedge rendering of an operator."""
        self.assertEqual(W("1,x,y").describe(), "1 ^ d_x ^ d_y")
        self.assertEqual(W("1,x", rho=P("x + 1")).describe(), "(x + 1) * 1 ^ d_x")
        self.assertEqual(str(W("1,x,y,xx")), "1,x,y,xx")

    @PINNED
    @given(polynomial_lists(2, 4), polynomials(2, integer=True), scalars())
    def test_multilinear_in_first_slot(self, args, g, a):
        """Test linearity in the first argument."""
        op = W("1,x,y,xy")
        mixed = op(args[0].scale(a) + g, *args[1:])
        self.assertEqual(mixed, op(*args).scale(a) + op(g, *args[1:]))

    @PINNED
    @given(polynomial_lists(2, 3), st.permutations(range(3)))
    def test_column_antisymmetry(self, args, perm):
        """Test that permuting arguments multiplies by the permutation sign."""
        op = W("1,x,y")
        swapped = op(*[args[i] for i in perm])
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        expected = op(*args)
        self.assertEqual(swapped, -expected if inversions % 2 else expected)

    @PINNED
    @given(polynomial_lists(2, 2))
    def test_repeated_argument_vanishes(self, args):
        """Test that a repeated argument gives zero."""
        self.assertTrue(W("1,x,y")(args[0], args[1], args[0]).is_zero())

    @PINNED
    @given(polynomial_lists(2, 4), polynomials(2, integer=True), polynomials(2, max_degree=2, integer=True))
    def test_first_column_expansion(self, args, g, rho):
        """Test that cofactor expansion along the first column matches the full determinant."""
        for spec in enumerate_specs(2, 2)[:3]:
            op = WronskianOperator(spec, rho if not rho.is_zero() else None)
            rest = args[: op.arity - 1]
            with self.subTest(spec=str(spec)):
                cofactors = op.first_column_cofactors(rest)
                self.assertEqual(op.combine_first_column(op.first_jet(g), cofactors), op(g, *rest))


class TestIndependence(unittest.TestCase):

    def test_independent(self):
        """Test that a nonzero Wronskian proves independence."""
        verdict, value = independence_witness(parse_spec_text("1,x", 1), [P("x", 1), P("x^2", 1)])
        self.assertEqual(verdict, INDEPENDENT)
        self.assertEqual(value, P("x^2", 1))

    def test_inconclusive(self):
        """Test that a zero Wronskian is only inconclusive."""
        verdict, value = independence_witness(parse_spec_text("1,x", 1), [P("x", 1), P("2*x", 1)])
        self.assertEqual(verdict, INCONCLUSIVE)
        self.assertTrue(value.is_zero())


class TestOrthants(unittest.TestCase):

    def test_sign_vector_order(self):
        """Test that orthants come positive-first in lexicographic order."""
        self.assertEqual(sign_vectors(2), [(1, 1), (1, -1), (-1, 1), (-1, -1)])

    def test_peano_1d(self):
        """Test that the one-variable Peano family vanishes on both half-lines."""
        spec, families = peano_case("1d")
        values = apply_orthant(spec, families)
        self.assertEqual(len(values), 2)
        self.assertTrue(all(v.is_zero() for v in values.values()))

    def test_peano_2d(self):
        """Test that the two-variable Peano family vanishes on all four quadrants."""
        spec, families = peano_case("2d")
        values = apply_orthant(spec, families)
        self.assertEqual(len(values), 4)
        self.assertTrue(all(v.is_zero() for v in values.values()))

    def test_broken_branch_is_detected(self):
        """Test that altering one branch makes exactly that orthant nonzero."""
        spec, families = peano_case("1d")
        families[1] = families[1].replace((1,), P("x", 1))
        values = apply_orthant(spec, families)
        self.assertEqual(values[(1,)], P("-x^2", 1))
        self.assertTrue(values[(-1,)].is_zero())

    def test_family_validation(self):
        """Test incomplete branch tables, unknown cases and arity mismatches."""
        with self.assertRaises(ValueError):
            OrthantFamily.from_mapping(2, {(1, 1): P("x")})
        with self.assertRaises(ValueError):
            peano_case("3d")
        spec, families = peano_case("1d")
        with self.assertRaises(ArityMismatchError):
            apply_orthant(spec, families[:1])


if __name__ == '__main__':
    unittest.main(verbosity=2)
