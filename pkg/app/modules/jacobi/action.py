"""
Insertion Action Module
The action Delta[Nabla] of one totally antisymmetric N-ary operator on
another:

    Delta[Nabla](a_1..a_n) = 1/(N_in! (N_out-1)!) *
        sum over tau in S_n of sign(tau) *
        Delta(Nabla(a_tau(1)..a_tau(N_in)), a_tau(N_in+1)..a_tau(n))

with n = N_in + N_out - 1. Both operators being totally antisymmetric,
each coset of S_{N_in} x S_{N_out-1} contributes N_in!(N_out-1)! equal
terms, so insertion_action sums one shuffle per coset with integer signs.
brute_force_action keeps the literal normalized sum as an oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Sequence

from app.config import BRUTE_FORCE_ARITY_GUARD
from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import ArityMismatchError, DimensionMismatchError, GuardExceededError
from app.modules.jacobi.shuffles import permutation_sign, shuffles
from app.modules.wronskian.operator import MultiLinearOp, check_arguments


def jacobiator_arity(outer: MultiLinearOp, inner: MultiLinearOp) -> int:
    return inner.arity + outer.arity - 1


def _check_pair(outer: MultiLinearOp, inner: MultiLinearOp, args: Sequence[Polynomial]) -> None:
    if outer.dimension != inner.dimension:
        raise DimensionMismatchError(outer.dimension, inner.dimension, "inner operator")
    arity = jacobiator_arity(outer, inner)
    if len(args) != arity:
        raise ArityMismatchError(arity, len(args))
    for arg in args:
        if arg.dimension != outer.dimension:
            raise DimensionMismatchError(outer.dimension, arg.dimension, "argument")


def insertion_action(outer: MultiLinearOp, inner: MultiLinearOp, args: Sequence[Polynomial]) -> Polynomial:
    """Shuffle form of Delta[Nabla](args)."""
    _check_pair(outer, inner, args)
    total = Polynomial.zero(outer.dimension)
    for term in shuffles(len(args), inner.arity):
        first = inner(*[args[i] for i in term.inner_slots])
        if first.is_zero():
            continue
        value = outer(first, *[args[i] for i in term.outer_slots])
        total = total + value if term.sign > 0 else total - value
    return total


def brute_force_action(
    outer: MultiLinearOp,
    inner: MultiLinearOp,
    args: Sequence[Polynomial],
    arity_guard: int = BRUTE_FORCE_ARITY_GUARD,
) -> Polynomial:
    """
    Literal normalized sum over the full symmetric group.

    Raises:
        GuardExceededError: arity above arity_guard ((arity)! terms)
    """
    _check_pair(outer, inner, args)
    n = len(args)
    if n > arity_guard:
        raise GuardExceededError(factorial(n), factorial(arity_guard), "permutation terms")
    n_in = inner.arity
    total = Polynomial.zero(outer.dimension)
    for tau in permutations(range(n)):
        first = inner(*[args[i] for i in tau[:n_in]])
        if first.is_zero():
            continue
        value = outer(first, *[args[i] for i in tau[n_in:]])
        total = total + value if permutation_sign(tau) > 0 else total - value
    return total.scale(Fraction(1, factorial(n_in) * factorial(outer.arity - 1)))


@dataclass(frozen=True)
class InsertionOperator:
    """Delta[Nabla] packaged as an operator in its own right."""

    outer: MultiLinearOp
    inner: MultiLinearOp

    def __post_init__(self):
        if self.outer.dimension != self.inner.dimension:
            raise DimensionMismatchError(self.outer.dimension, self.inner.dimension, "inner operator")

    @property
    def arity(self) -> int:
        return jacobiator_arity(self.outer, self.inner)

    @property
    def dimension(self) -> int:
        return self.outer.dimension

    @property
    def order(self) -> int:
        return self.outer.order + self.inner.order

    def __call__(self, *args: Polynomial) -> Polynomial:
        check_arguments(self, args)
        return insertion_action(self.outer, self.inner, args)
