"""
Orthant Module
Piecewise-polynomial arguments of |x| type, given by one polynomial per
open coordinate orthant, and orthant-wise Wronskian evaluation.

x|x| is stored as the family  eps_x * x^2 : +x^2 where x > 0, -x^2 where
x < 0. Coordinate hyperplanes are not modelled.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import ArityMismatchError, DimensionMismatchError
from app.modules.jets.spec import WronskianSpec, complete_spec
from app.modules.wronskian.operator import WronskianOperator

SignVector = Tuple[int, ...]


def sign_vectors(dimension: int) -> List[SignVector]:
    """All 2^d orthants, positive first: (+1,+1), (+1,-1), (-1,+1), (-1,-1)."""
    return list(product((1, -1), repeat=dimension))


def format_sign_vector(signs: SignVector) -> str:
    return "(" + ",".join("+" if s > 0 else "-" for s in signs) + ")"


@dataclass(frozen=True)
class OrthantFamily:
    """One polynomial branch per sign vector in {+1,-1}^d."""

    dimension: int
    branches: Tuple[Tuple[SignVector, Polynomial], ...]

    @classmethod
    def from_mapping(cls, dimension: int, branches: Mapping[SignVector, Polynomial]) -> "OrthantFamily":
        expected = set(sign_vectors(dimension))
        if set(branches) != expected:
            raise ValueError(f"orthant family needs exactly the {len(expected)} sign vectors of dimension {dimension}")
        for poly in branches.values():
            if poly.dimension != dimension:
                raise DimensionMismatchError(dimension, poly.dimension, "branch")
        return cls(dimension, tuple((signs, branches[signs]) for signs in sign_vectors(dimension)))

    @classmethod
    def uniform(cls, poly: Polynomial) -> "OrthantFamily":
        return cls.from_mapping(poly.dimension, {s: poly for s in sign_vectors(poly.dimension)})

    @classmethod
    def sign_prefixed(cls, poly: Polynomial, axes: Iterable[int]) -> "OrthantFamily":
        """(prod over axes a of eps_a) * poly; axes counted from 1."""
        axes = list(axes)
        branches = {}
        for signs in sign_vectors(poly.dimension):
            factor = 1
            for axis in axes:
                factor *= signs[axis - 1]
            branches[signs] = poly if factor > 0 else -poly
        return cls.from_mapping(poly.dimension, branches)

    def branch(self, signs: SignVector) -> Polynomial:
        return dict(self.branches)[tuple(signs)]

    def replace(self, signs: SignVector, poly: Polynomial) -> "OrthantFamily":
        table = dict(self.branches)
        table[tuple(signs)] = poly
        return OrthantFamily.from_mapping(self.dimension, table)


def apply_orthant(spec: WronskianSpec, families: Sequence[OrthantFamily]) -> Dict[SignVector, Polynomial]:
    """Evaluates the Wronskian of `spec` on each orthant's branches."""
    if len(families) != spec.size:
        raise ArityMismatchError(spec.size, len(families))
    for family in families:
        if family.dimension != spec.dimension:
            raise DimensionMismatchError(spec.dimension, family.dimension, "orthant family")
    op = WronskianOperator(spec)
    tables = [dict(family.branches) for family in families]
    return {signs: op(*[table[signs] for table in tables]) for signs in sign_vectors(spec.dimension)}


# =============================================================================
# PINNED PEANO FAMILIES
# =============================================================================

def peano_case(case: str) -> Tuple[WronskianSpec, List[OrthantFamily]]:
    """
    The two pinned examples of functions with identically vanishing
    Wronskian that are nonetheless linearly independent:

        1d:  W^{0,1}(x^2, x|x|)
        2d:  W^{d=2}_{k=1}(x^2 y^2, x|x| y^2, x^2 y|y|)
    """
    if case == "1d":
        x2 = Polynomial.monomial((2,))
        return complete_spec(1, 1), [OrthantFamily.uniform(x2), OrthantFamily.sign_prefixed(x2, [1])]
    if case == "2d":
        x2y2 = Polynomial.monomial((2, 2))
        return complete_spec(2, 1), [
            OrthantFamily.uniform(x2y2),
            OrthantFamily.sign_prefixed(x2y2, [1]),
            OrthantFamily.sign_prefixed(x2y2, [2]),
        ]
    raise ValueError(f"unknown Peano case {case!r}; expected '1d' or '2d'")
