"""
Shuffle Module
Permutation parity and (N_in, N_out - 1) shuffles: the coset
representatives that collapse the normalized full permutation sum of the
insertion action into a signed sum over slot subsets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence, Tuple


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even, -1 for odd permutations of 0..n-1 (cycle count parity)."""
    n = len(perm)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return -1 if (n - cycles) % 2 else 1


@dataclass(frozen=True)
class ShuffleTerm:
    """
    One term of the shuffle sum. Slots are 0-based argument positions.

    Attributes:
        inner_slots: increasing positions fed to the inner operator
        outer_slots: the complementary increasing positions
        sign: parity of the concatenation (inner_slots, outer_slots)
    """

    inner_slots: Tuple[int, ...]
    outer_slots: Tuple[int, ...]
    sign: int


@lru_cache(maxsize=None)
def shuffles(arity: int, n_in: int) -> Tuple[ShuffleTerm, ...]:
    """All C(arity, n_in) shuffles, inner subsets in lexicographic order."""
    if not 0 <= n_in <= arity:
        raise ValueError(f"inner arity {n_in} outside 0..{arity}")
    terms = []
    for inner in combinations(range(arity), n_in):
        chosen = set(inner)
        outer = tuple(i for i in range(arity) if i not in chosen)
        # inversions of (inner, outer): each inner slot jumps over the
        # smaller outer slots
        parity = sum(slot - position for position, slot in enumerate(inner)) % 2
        terms.append(ShuffleTerm(inner, outer, -1 if parity else 1))
    return tuple(terms)


def shuffle_count(arity: int, n_in: int) -> int:
    return comb(arity, n_in)
