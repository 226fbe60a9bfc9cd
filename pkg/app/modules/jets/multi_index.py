"""
Multi-Index Module
Enumeration of jet-fibre coordinates u_sigma, |sigma| <= k, in canonical
graded-lex order, and their text forms.
"""

from itertools import combinations_with_replacement
from math import comb
from typing import List, Tuple

from app.modules.algebra.polynomial import grlex_key
from app.modules.parser.expr_parser import LETTER_NAMES


MultiIndex = Tuple[int, ...]


def order(sigma: MultiIndex) -> int:
    """Differential order |sigma|."""
    return sum(sigma)


def indices_of_order(d: int, k: int) -> List[MultiIndex]:
    """All multi-indices with |sigma| = k, x-heavy first."""
    result = []
    for axes in combinations_with_replacement(range(d), k):
        sigma = [0] * d
        for axis in axes:
            sigma[axis] += 1
        result.append(tuple(sigma))
    return sorted(result, key=grlex_key)


def enumerate_multi_indices(d: int, k: int) -> List[MultiIndex]:
    """
    All multi-indices of order <= k in graded-lex order, empty index first.

    Example (d=2, k=2): (0,0), (1,0), (0,1), (2,0), (1,1), (0,2)
    """
    if d < 1:
        raise ValueError("dimension d must be at least 1")
    if k < 0:
        raise ValueError("order k must be non-negative")
    result: List[MultiIndex] = []
    for level in range(k + 1):
        result.extend(indices_of_order(d, level))
    return result


def jet_fibre_dim(d: int, k: int) -> int:
    """Dimension of the k-th jet fibre, C(d+k, d)."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    return comb(d + k, d)


# =============================================================================
# TEXT FORMS
# =============================================================================

def format_multi_index(sigma: MultiIndex, tuples: bool = False) -> str:
    """
    Letter word ("1" for the empty index, "x", "xy", "yy") when d <= 3,
    otherwise a parenthesized integer tuple "(2,0,1,0)".
    """
    if tuples or len(sigma) > len(LETTER_NAMES):
        return "(" + ",".join(str(s) for s in sigma) + ")"
    if not any(sigma):
        return "1"
    return "".join(LETTER_NAMES[axis] * power for axis, power in enumerate(sigma))


def describe_operator(sigma: MultiIndex) -> str:
    """Wedge-factor notation: "1", "d_x", "d_xy"."""
    word = format_multi_index(sigma)
    return "1" if word == "1" else f"d_{word}"
