"""
Exact Polynomial Module
Sparse multivariate polynomials over the rationals, with formal partial
differentiation. Every other module computes in this ring.

Coefficients are fractions.Fraction (always reduced, zero stored as 0/1);
a polynomial never stores a zero coefficient, so equal term maps mean
equal polynomials.
"""

from fractions import Fraction
from math import factorial, prod
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from app.modules.errors import DimensionMismatchError, InvalidAxisError


Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


# =============================================================================
# MONOMIAL ORDER
# =============================================================================

def grlex_key(exponents: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """
    Ascending graded-lex key with x1 > x2 > ... > xd.

    Sorting with this key lists lower degrees first and, inside a degree,
    x-heavy monomials first: 1, x, y, x^2, x*y, y^2, ...
    """
    return sum(exponents), tuple(-e for e in exponents)


def leading_key(exponents: Monomial) -> Tuple[int, Monomial]:
    """Graded-lex comparison key; the maximum is the leading monomial."""
    return sum(exponents), exponents


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


# =============================================================================
# POLYNOMIAL
# =============================================================================

class Polynomial:
    """
    Immutable element of Q[x1, ..., xd].

    Args:
        dimension: number of variables d (d >= 1)
        terms: mapping monomial exponents -> coefficient; zeros are dropped
    """

    __slots__ = ("_dimension", "_terms", "_hash")

    def __init__(self, dimension: int, terms: Mapping[Monomial, Scalar] = None):
        if dimension < 1:
            raise ValueError("polynomial dimension must be at least 1")
        clean: Dict[Monomial, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != dimension:
                raise DimensionMismatchError(dimension, len(exponents), "monomial")
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            value = clean.get(exponents, Fraction(0)) + Fraction(coeff)
            if value:
                clean[exponents] = value
            else:
                clean.pop(exponents, None)
        self._dimension = dimension
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dimension: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # Trusted constructor: terms already canonical.
        obj = cls.__new__(cls)
        obj._dimension = dimension
        obj._terms = terms
        obj._hash = None
        return obj

    # ---- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dimension: int) -> "Polynomial":
        return cls(dimension)

    @classmethod
    def constant(cls, dimension: int, value: Scalar) -> "Polynomial":
        return cls(dimension, {(0,) * dimension: value})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: Scalar = 1) -> "Polynomial":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @classmethod
    def variable(cls, dimension: int, axis: int) -> "Polynomial":
        """The coordinate x^axis, axis counted from 1."""
        _check_axis(dimension, axis)
        exponents = [0] * dimension
        exponents[axis - 1] = 1
        return cls(dimension, {tuple(exponents): 1})

    # ---- accessors ----------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """A copy of the canonical term map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in ascending graded-lex order."""
        for exponents in sorted(self._terms, key=grlex_key):
            yield exponents, self._terms[exponents]

    def coefficient(self, exponents: Monomial) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        exponents = max(self._terms, key=leading_key)
        return exponents, self._terms[exponents]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._dimension != self._dimension:
                raise DimensionMismatchError(self._dimension, other._dimension)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._dimension, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        result = dict(big)
        for exponents, coeff in small.items():
            value = result.get(exponents)
            if value is None:
                result[exponents] = coeff
            else:
                value += coeff
                if value:
                    result[exponents] = value
                else:
                    del result[exponents]
        return Polynomial._raw(self._dimension, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._dimension, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Polynomial._raw(self._dimension, {})
        result: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                result[exponents] = result.get(exponents, 0) + c1 * c2
        return Polynomial._raw(self._dimension, {e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial._raw(self._dimension, {})
        return Polynomial._raw(self._dimension, {e: c * factor for e, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial.constant(self._dimension, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """
        Quotient of an exact division in Q[x].

        Raises:
            ZeroDivisionError: divisor is zero
            ArithmeticError: divisor does not divide self
        """
        divisor = self._coerce(divisor)
        if not divisor._terms:
            raise ZeroDivisionError("polynomial division by zero")
        lead_exp, lead_coeff = divisor.leading_term()
        if len(divisor._terms) == 1:
            quotient = {}
            for exponents, coeff in self._terms.items():
                if not monomial_divides(lead_exp, exponents):
                    raise ArithmeticError("division is not exact")
                quotient[tuple(a - b for a, b in zip(exponents, lead_exp))] = coeff / lead_coeff
            return Polynomial._raw(self._dimension, quotient)

        remainder = self
        quotient: Dict[Monomial, Fraction] = {}
        while remainder._terms:
            rem_exp, rem_coeff = remainder.leading_term()
            if not monomial_divides(lead_exp, rem_exp):
                raise ArithmeticError("division is not exact")
            shift = tuple(a - b for a, b in zip(rem_exp, lead_exp))
            factor = rem_coeff / lead_coeff
            quotient[shift] = factor
            step = Polynomial._raw(
                self._dimension,
                {tuple(a + b for a, b in zip(e, shift)): c * factor for e, c in divisor._terms.items()},
            )
            remainder = remainder - step
        return Polynomial._raw(self._dimension, quotient)

    # ---- calculus -----------------------------------------------------------

    def partial(self, axis: int) -> "Polynomial":
        """Formal derivative along x^axis (axis counted from 1)."""
        _check_axis(self._dimension, axis)
        i = axis - 1
        result: Dict[Monomial, Fraction] = {}
        for exponents, coeff in self._terms.items():
            power = exponents[i]
            if power:
                shifted = exponents[:i] + (power - 1,) + exponents[i + 1:]
                result[shifted] = coeff * power
        return Polynomial._raw(self._dimension, result)

    def derive(self, sigma: Monomial) -> "Polynomial":
        """Mixed partial derivative by the multi-index sigma, in one pass."""
        sigma = tuple(sigma)
        if len(sigma) != self._dimension:
            raise DimensionMismatchError(self._dimension, len(sigma), "multi-index")
        if not any(sigma):
            return self
        result: Dict[Monomial, Fraction] = {}
        for exponents, coeff in self._terms.items():
            if not monomial_divides(sigma, exponents):
                continue
            factor = 1
            for power, order in zip(exponents, sigma):
                for j in range(order):
                    factor *= power - j
            result[tuple(p - o for p, o in zip(exponents, sigma))] = coeff * factor
        return Polynomial._raw(self._dimension, result)

    # ---- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._dimension == other._dimension and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._dimension, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dimension, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from app.modules.parser.expr_parser import render
        return f"Polynomial(d={self._dimension}, {render(self)!r})"


def _check_axis(dimension: int, axis: int) -> None:
    if not isinstance(axis, int) or not 1 <= axis <= dimension:
        raise InvalidAxisError(f"axis {axis} outside 1..{dimension}")


# =============================================================================
# MODULE-LEVEL OPERATIONS
# =============================================================================

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial(p: Polynomial, axis: int) -> Polynomial:
    return p.partial(axis)


def derive_multi(p: Polynomial, sigma: Monomial) -> Polynomial:
    """Iterated partial d^|sigma| p / dx^sigma; axis order is immaterial."""
    return p.derive(sigma)


def is_zero(p: Polynomial) -> bool:
    return p.is_zero()


def factorial_product(exponents: Monomial) -> int:
    """prod_a beta_a!, the value of derive_multi(x^beta, beta)."""
    return prod(factorial(e) for e in exponents)
