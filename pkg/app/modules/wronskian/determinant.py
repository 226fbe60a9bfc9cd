"""
Determinant Module
Exact determinants of square matrices over Q[x1..xd].

det_bareiss is the production routine (fraction-free elimination, every
division exact in the ring). det_laplace is an independent cofactor
expansion used as an oracle.
"""

from typing import Dict, List, Sequence, Tuple

from app.config import LAPLACE_SIZE_GUARD
from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import MatrixShapeError

PolyMatrix = Sequence[Sequence[Polynomial]]


def _check_square(matrix: PolyMatrix) -> int:
    n = len(matrix)
    if n == 0:
        raise MatrixShapeError("determinant of an empty matrix")
    for row in matrix:
        if len(row) != n:
            raise MatrixShapeError(f"matrix is not square: row of length {len(row)} in {n} rows")
    return n


def det_bareiss(matrix: PolyMatrix) -> Polynomial:
    """
    Fraction-free Gaussian elimination (Bareiss).

    A zero pivot is replaced by swapping in a lower row with a nonzero
    entry in the pivot column (tracking the sign); if there is none the
    determinant is zero.
    """
    n = _check_square(matrix)
    dimension = matrix[0][0].dimension
    m: List[List[Polynomial]] = [list(row) for row in matrix]
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    sign = 1
    previous = None
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(dimension)

        pivot = m[k][k]
        for i in range(k + 1, n):
            lead = m[i][k]
            for j in range(k + 1, n):
                if lead.is_zero():
                    entry = pivot * m[i][j]
                else:
                    entry = pivot * m[i][j] - lead * m[k][j]
                if previous is not None and not entry.is_zero():
                    entry = entry.exact_divide(previous)
                m[i][j] = entry
        previous = pivot

    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def det_laplace(matrix: PolyMatrix, size_guard: int = LAPLACE_SIZE_GUARD) -> Polynomial:
    """
    Cofactor expansion along successive rows, memoizing minors by the set
    of remaining columns.

    Raises:
        MatrixShapeError: non-square, or larger than size_guard
    """
    n = _check_square(matrix)
    if n > size_guard:
        raise MatrixShapeError(f"Laplace expansion limited to {size_guard}x{size_guard}, got {n}x{n}")
    dimension = matrix[0][0].dimension
    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def minor(columns: Tuple[int, ...]) -> Polynomial:
        if not columns:
            return Polynomial.constant(dimension, 1)
        cached = memo.get(columns)
        if cached is not None:
            return cached
        row = matrix[n - len(columns)]
        total = Polynomial.zero(dimension)
        for position, column in enumerate(columns):
            entry = row[column]
            if entry.is_zero():
                continue
            rest = columns[:position] + columns[position + 1:]
            term = entry * minor(rest)
            total = total - term if position % 2 else total + term
        memo[columns] = total
        return total

    return minor(tuple(range(n)))
