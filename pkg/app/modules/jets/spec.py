"""
Wronskian Spec Module
Row sets of (in)complete generalized Wronskians: validity, admissibility,
the CLI spec grammar and the spec families the theorem sweeps run over.

A spec is valid when every multi-index below the top order k is present;
only top-order indices may be omitted. It is admissible when, in
addition, every first-order index is present.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.modules.algebra.polynomial import grlex_key
from app.modules.errors import InvalidSpecError, ParseError
from app.modules.jets.multi_index import (
    MultiIndex,
    enumerate_multi_indices,
    format_multi_index,
    indices_of_order,
    jet_fibre_dim,
    order,
)
from app.modules.parser.expr_parser import LETTER_NAMES

logger = logging.getLogger(__name__)

ADMISSIBILITY_CONDITION = "set of first-order derivatives is complete"
VALIDITY_CONDITION = "exclusion is allowed only for the highest-order derivatives"


@dataclass(frozen=True)
class WronskianSpec:
    """
    Sorted, duplicate-free row set of a generalized Wronskian.

    Attributes:
        dimension: ambient dimension d
        rows: multi-indices in graded-lex order (empty index first)
        relaxed: built by make_relaxed_spec (experimental, gaps allowed
            above order 1)
    """

    dimension: int
    rows: Tuple[MultiIndex, ...]
    relaxed: bool = False

    @property
    def order(self) -> int:
        return max(order(sigma) for sigma in self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def is_complete(self) -> bool:
        return self.size == jet_fibre_dim(self.dimension, self.order)

    def top_rows(self) -> List[MultiIndex]:
        k = self.order
        return [sigma for sigma in self.rows if order(sigma) == k]

    def __str__(self) -> str:
        return format_spec(self)


# =============================================================================
# CONSTRUCTION
# =============================================================================

def _normalize_rows(d: int, rows: Iterable[Sequence[int]]) -> Tuple[MultiIndex, ...]:
    if d < 1:
        raise InvalidSpecError("dimension d must be at least 1", "d >= 1")
    normalized = [tuple(int(s) for s in sigma) for sigma in rows]
    if not normalized:
        raise InvalidSpecError("row list is empty", "non-empty rows")
    for sigma in normalized:
        if len(sigma) != d:
            raise InvalidSpecError(f"multi-index {sigma} has length {len(sigma)}, expected {d}", "row length")
        if any(s < 0 for s in sigma):
            raise InvalidSpecError(f"multi-index {sigma} has a negative entry", "non-negative entries")
    if len(set(normalized)) != len(normalized):
        seen = set()
        for sigma in normalized:
            if sigma in seen:
                raise InvalidSpecError(f"duplicate row {format_multi_index(sigma)}", "duplicate row")
            seen.add(sigma)
    return tuple(sorted(normalized, key=grlex_key))


def make_spec(d: int, rows: Iterable[Sequence[int]]) -> WronskianSpec:
    """
    Builds a validated spec.

    Raises:
        InvalidSpecError: empty list, duplicate row, wrong length, or a
            missing multi-index of non-top order
    """
    ordered = _normalize_rows(d, rows)
    k = max(order(sigma) for sigma in ordered)
    present = set(ordered)
    for sigma in enumerate_multi_indices(d, k - 1) if k > 0 else []:
        if sigma not in present:
            raise InvalidSpecError(
                f"missing multi-index {format_multi_index(sigma)} of order {order(sigma)} < {k}",
                VALIDITY_CONDITION,
            )
    return WronskianSpec(d, ordered)


def make_relaxed_spec(d: int, rows: Iterable[Sequence[int]]) -> WronskianSpec:
    """
    Experimental: requires completeness at orders 0 and 1 only, so gaps
    at intermediate orders 1 < l < k are accepted.
    """
    ordered = _normalize_rows(d, rows)
    present = set(ordered)
    k = max(order(sigma) for sigma in ordered)
    for sigma in enumerate_multi_indices(d, min(k, 1)):
        if sigma not in present:
            raise InvalidSpecError(
                f"missing multi-index {format_multi_index(sigma)} of order {order(sigma)}",
                ADMISSIBILITY_CONDITION,
            )
    spec = WronskianSpec(d, ordered, relaxed=True)
    logger.info("relaxed spec %s built; verdicts on it are experimental", format_spec(spec))
    return spec


def complete_spec(d: int, k: int) -> WronskianSpec:
    return WronskianSpec(d, tuple(enumerate_multi_indices(d, k)))


# =============================================================================
# PREDICATES
# =============================================================================

def is_admissible(spec: WronskianSpec) -> bool:
    """Every first-order multi-index appears (the k = 0 spec never qualifies)."""
    present = set(spec.rows)
    return all(sigma in present for sigma in indices_of_order(spec.dimension, 1))


def missing_top_count(spec: WronskianSpec) -> int:
    return jet_fibre_dim(spec.dimension, spec.order) - spec.size


# =============================================================================
# FAMILIES
# =============================================================================

def enumerate_specs(d: int, k: int, admissible_only: bool = False) -> List[WronskianSpec]:
    """
    Every valid spec of order exactly k: all lower orders complete plus a
    non-empty subset of the order-k indices. Incomplete specs come first,
    by growing top subset; the complete spec is last.
    """
    lower = enumerate_multi_indices(d, k - 1) if k > 0 else []
    top = indices_of_order(d, k)
    specs = []
    for size in range(1, len(top) + 1):
        for subset in combinations(top, size):
            spec = WronskianSpec(d, tuple(sorted(lower + list(subset), key=grlex_key)))
            if admissible_only and not is_admissible(spec):
                continue
            specs.append(spec)
    return specs


def growth_chain(d: int, k: int) -> List[WronskianSpec]:
    """
    Specs from the complete order-(k-1) Wronskian to the complete order-k
    one, adding a single top-order index per step; sizes grow by exactly 1.
    """
    if k < 1:
        raise ValueError("growth chain needs k >= 1")
    rows = enumerate_multi_indices(d, k - 1)
    chain = [WronskianSpec(d, tuple(rows))]
    for sigma in indices_of_order(d, k):
        rows = rows + [sigma]
        chain.append(WronskianSpec(d, tuple(sorted(rows, key=grlex_key))))
    return chain


# =============================================================================
# TEXT FORMAT
# =============================================================================

def _parse_word(word: str, d: int, offset: int) -> MultiIndex:
    stripped = word.strip()
    start = offset + (len(word) - len(word.lstrip()))
    if stripped in ("", "1"):
        return (0,) * d
    if stripped.startswith("("):
        if not stripped.endswith(")"):
            raise ParseError(start + len(stripped), "')'", "end of multi-index")
        try:
            entries = tuple(int(part) for part in stripped[1:-1].split(","))
        except ValueError:
            raise ParseError(start, "integer tuple", repr(stripped)) from None
        if len(entries) != d or any(e < 0 for e in entries):
            raise ParseError(start, f"{d} non-negative integers", repr(stripped))
        return entries
    if d > len(LETTER_NAMES):
        raise ParseError(start, "integer tuple such as (1,0,...)", repr(stripped))
    letters = LETTER_NAMES[:d]
    sigma = [0] * d
    for i, char in enumerate(stripped):
        if char not in letters:
            raise ParseError(start + i, "variable letter (" + ", ".join(letters) + ")", repr(char))
        sigma[letters.index(char)] += 1
    return tuple(sigma)


def parse_multi_indices(text: str, d: int) -> List[MultiIndex]:
    """
    Splits "1,x,y,xx" or "(0,0),(1,0)" on top-level commas and parses each
    entry. Parenthesized tuples may contain commas. Error positions are
    UTF-8 byte offsets.
    """
    try:
        return _split_entries(text, d)
    except ParseError as exc:
        raise exc.in_bytes(text) from None


def _split_entries(text: str, d: int) -> List[MultiIndex]:
    entries: List[Tuple[str, int]] = []
    depth = 0
    start = 0
    for i, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(i, "multi-index", "unbalanced ')'")
        elif char == "," and depth == 0:
            entries.append((text[start:i], start))
            start = i + 1
    if depth:
        raise ParseError(len(text), "')'", "end of input")
    entries.append((text[start:], start))
    return [_parse_word(word, d, offset) for word, offset in entries]


def parse_spec_text(text: str, d: int, relaxed: bool = False) -> WronskianSpec:
    rows = parse_multi_indices(text, d)
    return make_relaxed_spec(d, rows) if relaxed else make_spec(d, rows)


def format_spec(spec: WronskianSpec) -> str:
    return ",".join(format_multi_index(sigma) for sigma in spec.rows)
