"""
Wronskian Operator Module
Generalized (in)complete Wronskians as totally antisymmetric N-ary maps
on polynomials, optionally pre-multiplied by a factor rho(x).

Row i of the matrix is the multi-index sigma_i (canonical graded-lex
order), column j is the argument f_j:  M[i][j] = d^sigma_i f_j.
"""

from dataclasses import dataclass
from typing import List, Optional, Protocol, Sequence

from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import ArityMismatchError, DimensionMismatchError
from app.modules.jets.multi_index import describe_operator
from app.modules.jets.spec import WronskianSpec, format_spec
from app.modules.parser.expr_parser import render
from app.modules.wronskian.determinant import det_bareiss


class MultiLinearOp(Protocol):
    """What the insertion action and the certifier need from an operator."""

    @property
    def arity(self) -> int: ...

    @property
    def dimension(self) -> int: ...

    @property
    def order(self) -> int:
        """Highest derivative order applied to any single argument."""
        ...

    def __call__(self, *args: Polynomial) -> Polynomial: ...


def check_arguments(op: MultiLinearOp, args: Sequence[Polynomial]) -> None:
    if len(args) != op.arity:
        raise ArityMismatchError(op.arity, len(args))
    for arg in args:
        if arg.dimension != op.dimension:
            raise DimensionMismatchError(op.dimension, arg.dimension, "argument")


# =============================================================================
# WRONSKIAN
# =============================================================================

@dataclass(frozen=True)
class WronskianOperator:
    """
    rho(x) * det(d^sigma_i f_j) over the rows of `spec`.

    Args:
        spec: validated row set
        rho: optional prefactor of the same dimension
    """

    spec: WronskianSpec
    rho: Optional[Polynomial] = None

    def __post_init__(self):
        if self.rho is not None and self.rho.dimension != self.spec.dimension:
            raise DimensionMismatchError(self.spec.dimension, self.rho.dimension, "rho")

    @property
    def arity(self) -> int:
        return self.spec.size

    @property
    def dimension(self) -> int:
        return self.spec.dimension

    @property
    def order(self) -> int:
        return self.spec.order

    def with_rho(self, rho: Optional[Polynomial]) -> "WronskianOperator":
        return WronskianOperator(self.spec, rho)

    def matrix(self, args: Sequence[Polynomial]) -> List[List[Polynomial]]:
        return [[f.derive(sigma) for f in args] for sigma in self.spec.rows]

    def __call__(self, *args: Polynomial) -> Polynomial:
        check_arguments(self, args)
        value = det_bareiss(self.matrix(args))
        if self.rho is not None:
            value = self.rho * value
        return value

    # ---- first-column expansion, used by the certifier's caches -------------

    def first_column_cofactors(self, rest: Sequence[Polynomial]) -> List[Polynomial]:
        """
        Signed cofactors C_i of the first column, rho included, so that
        self(g, *rest) == sum_i d^sigma_i g * C_i for every g.
        """
        if len(rest) != self.arity - 1:
            raise ArityMismatchError(self.arity - 1, len(rest))
        n = self.arity
        if n == 1:
            one = Polynomial.constant(self.dimension, 1)
            return [self.rho if self.rho is not None else one]
        rows = self.matrix(rest)
        cofactors = []
        for i in range(n):
            minor = det_bareiss(rows[:i] + rows[i + 1:])
            if i % 2:
                minor = -minor
            if self.rho is not None:
                minor = self.rho * minor
            cofactors.append(minor)
        return cofactors

    def first_jet(self, first: Polynomial) -> List[Polynomial]:
        """The derivatives d^sigma_i of a first argument, one per row."""
        return [first.derive(sigma) for sigma in self.spec.rows]

    def combine_first_column(self, jet: Sequence[Polynomial], cofactors: Sequence[Polynomial]) -> Polynomial:
        """sum_i jet[i] * cofactors[i]: the operator with its first column fixed."""
        total = Polynomial.zero(self.dimension)
        for derivative, cofactor in zip(jet, cofactors):
            if derivative.is_zero() or cofactor.is_zero():
                continue
            total = total + derivative * cofactor
        return total

    def describe(self) -> str:
        wedge = " ^ ".join(describe_operator(sigma) for sigma in self.spec.rows)
        if self.rho is not None:
            return f"({render(self.rho)}) * {wedge}"
        return wedge

    def __str__(self) -> str:
        return format_spec(self.spec)


def apply(op: MultiLinearOp, args: Sequence[Polynomial]) -> Polynomial:
    """Evaluates op on args after arity and dimension checks."""
    check_arguments(op, args)
    return op(*args)


# =============================================================================
# LINEAR INDEPENDENCE
# =============================================================================

INDEPENDENT = "independent"
INCONCLUSIVE = "inconclusive"


def independence_witness(spec: WronskianSpec, args: Sequence[Polynomial]):
    """
    A nonzero Wronskian proves the arguments linearly independent; a zero
    one proves nothing (x^2 and x|x| are independent with zero Wronskian).

    Returns:
        Tuple of (verdict, Wronskian value)
    """
    value = apply(WronskianOperator(spec), args)
    return (INCONCLUSIVE if value.is_zero() else INDEPENDENT), value
