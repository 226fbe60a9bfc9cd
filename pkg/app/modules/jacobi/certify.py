"""
Certification Module
Decides whether a Jacobiator Delta[Nabla] vanishes identically.

The Jacobiator is multilinear and totally antisymmetric, and differentiates
each argument at most M = k_out + l_in times. A multi-differential
operator with polynomial coefficients and per-slot order <= M vanishes iff
it vanishes on every tuple of monomials of degree <= M (the matrix
(d^alpha x^beta) over |alpha|, |beta| <= M is triangular with nonzero
diagonal at the origin). By antisymmetry only strictly increasing tuples
of distinct basis monomials need evaluating: C(C(d+M, d), arity) tuples.

random_check is a probabilistic pre-screen: a nonzero verdict is
definitive, a zero verdict is evidence only.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.config import DEFAULT_GUARD, DEFAULT_MAX_WITNESSES, DEFAULT_SEED, DEFAULT_THREADS, SCAN_CHUNK_SIZE
from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import ArityMismatchError, DimensionMismatchError, GuardExceededError
from app.modules.jacobi.action import insertion_action, jacobiator_arity
from app.modules.jacobi.shuffles import ShuffleTerm, shuffles
from app.modules.jets.multi_index import enumerate_multi_indices
from app.modules.wronskian.operator import MultiLinearOp, WronskianOperator

logger = logging.getLogger(__name__)

ZERO = "zero"
NONZERO = "nonzero"


# =============================================================================
# RESULT TYPES
# =============================================================================

@dataclass(frozen=True)
class Witness:
    """An argument tuple on which the checked operator is nonzero."""

    args: Tuple[Polynomial, ...]
    value: Polynomial
    index: int = 0


@dataclass
class Certificate:
    """
    Outcome of certify_zero, certify_proportional or random_check.

    verdict is "nonzero" exactly when witnesses is non-empty; certifying
    is True only for exhaustive runs.
    """

    verdict: str
    basis_bound: int
    tuples_checked: int
    witnesses: List[Witness] = field(default_factory=list)
    elapsed: float = 0.0
    certifying: bool = True
    mode: str = "certify"
    seed: Optional[int] = None
    trials: Optional[int] = None
    max_degree: Optional[int] = None
    total_tuples: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.verdict == ZERO


def monomial_basis(dimension: int, bound: int) -> List[Polynomial]:
    """Monomials of total degree <= bound, graded-lex ascending."""
    return [Polynomial.monomial(sigma) for sigma in enumerate_multi_indices(dimension, bound)]


def certification_bound(outer: MultiLinearOp, inner: MultiLinearOp) -> int:
    return outer.order + inner.order


def required_work(outer: MultiLinearOp, inner: MultiLinearOp) -> Tuple[int, int, int]:
    """(tuple count, shuffle terms per tuple, product) for certify_zero."""
    arity = jacobiator_arity(outer, inner)
    basis_size = comb(outer.dimension + certification_bound(outer, inner), outer.dimension)
    tuples = comb(basis_size, arity)
    terms = comb(arity, inner.arity)
    return tuples, terms, tuples * terms


# =============================================================================
# CACHED JACOBIATOR EVALUATION
# =============================================================================

class JacobiatorEvaluator:
    """
    Evaluates Delta[Nabla] on tuples of basis polynomials given by index.

    Inner values (as first-column jets of the outer Wronskian) are cached
    by inner index subset; outer first-column cofactors are cached by
    outer index subset. Cache writes are idempotent.
    """

    def __init__(self, outer: MultiLinearOp, inner: MultiLinearOp, basis: Sequence[Polynomial]):
        if outer.dimension != inner.dimension:
            raise DimensionMismatchError(outer.dimension, inner.dimension, "inner operator")
        self.outer = outer
        self.inner = inner
        self.basis = list(basis)
        self.arity = jacobiator_arity(outer, inner)
        self.terms: Tuple[ShuffleTerm, ...] = shuffles(self.arity, inner.arity)
        self._fast = isinstance(outer, WronskianOperator)
        self._inner_cache: Dict[Tuple[int, ...], object] = {}
        self._cofactor_cache: Dict[Tuple[int, ...], List[Polynomial]] = {}

    def _inner(self, indices: Tuple[int, ...]):
        cached = self._inner_cache.get(indices)
        if cached is None:
            value = self.inner(*[self.basis[i] for i in indices])
            cached = self.outer.first_jet(value) if (self._fast and not value.is_zero()) else value
            self._inner_cache[indices] = cached
        return cached

    def _cofactors(self, indices: Tuple[int, ...]) -> List[Polynomial]:
        cached = self._cofactor_cache.get(indices)
        if cached is None:
            cached = self.outer.first_column_cofactors([self.basis[i] for i in indices])
            self._cofactor_cache[indices] = cached
        return cached

    def evaluate(self, indices: Sequence[int]) -> Polynomial:
        total = Polynomial.zero(self.outer.dimension)
        for term in self.terms:
            first = self._inner(tuple(indices[s] for s in term.inner_slots))
            if isinstance(first, Polynomial):
                if first.is_zero():
                    continue
                value = self.outer(first, *[self.basis[indices[s]] for s in term.outer_slots])
            else:
                cofactors = self._cofactors(tuple(indices[s] for s in term.outer_slots))
                value = self.outer.combine_first_column(first, cofactors)
            if value.is_zero():
                continue
            total = total + value if term.sign > 0 else total - value
        return total

    __call__ = evaluate

    def cache_sizes(self) -> Tuple[int, int]:
        return len(self._inner_cache), len(self._cofactor_cache)


class ProportionalResidual:
    """Delta[Nabla] - factor * reference on basis tuples given by index."""

    def __init__(self, evaluator: JacobiatorEvaluator, reference: MultiLinearOp, factor: Fraction):
        self.evaluator = evaluator
        self.reference = reference
        self.factor = factor

    def __call__(self, indices: Sequence[int]) -> Polynomial:
        expected = self.reference(*[self.evaluator.basis[i] for i in indices]).scale(self.factor)
        return self.evaluator.evaluate(indices) - expected


# =============================================================================
# EXHAUSTIVE SCAN
# =============================================================================

# Per-process residual, installed once by the pool initializer so each
# worker keeps its own caches across chunks.
_worker_residual: Optional[Callable[[Tuple[int, ...]], Polynomial]] = None


def _install_residual(residual: Callable[[Tuple[int, ...]], Polynomial]) -> None:
    global _worker_residual
    _worker_residual = residual


def _evaluate_chunk(chunk: Sequence[Tuple[int, ...]]) -> List[Polynomial]:
    return [_worker_residual(indices) for indices in chunk]


def _scan(
    residual: Callable[[Tuple[int, ...]], Polynomial],
    tuples: Iterable[Tuple[int, ...]],
    basis: Sequence[Polynomial],
    workers: int,
    max_witnesses: int,
) -> Tuple[int, List[Witness]]:
    """
    Evaluates residual on every tuple in order; stops after max_witnesses
    nonzero results. Witnesses come back in enumeration order.

    With workers > 1 the tuples are split into chunks evaluated by a
    process pool; residual must be picklable.
    """
    witnesses: List[Witness] = []
    checked = 0

    def record(position: int, indices: Tuple[int, ...], value: Polynomial) -> bool:
        if value.is_zero():
            return False
        witnesses.append(Witness(tuple(basis[i] for i in indices), value, position))
        return len(witnesses) >= max_witnesses

    if workers <= 1:
        for position, indices in enumerate(tuples):
            checked += 1
            if record(position, indices, residual(indices)):
                break
        return checked, witnesses

    work = list(tuples)
    chunks = [work[i:i + SCAN_CHUNK_SIZE] for i in range(0, len(work), SCAN_CHUNK_SIZE)]
    logger.debug("scanning %d tuples in %d chunks on %d processes", len(work), len(chunks), workers)
    executor = ProcessPoolExecutor(max_workers=workers, initializer=_install_residual, initargs=(residual,))
    try:
        for chunk, values in zip(chunks, executor.map(_evaluate_chunk, chunks)):
            for indices, value in zip(chunk, values):
                if record(checked, indices, value):
                    return checked + 1, witnesses
                checked += 1
    finally:
        executor.shutdown(wait=True, cancel_futures=True)
    return checked, witnesses


def _check_guard(required: int, guard: int) -> None:
    if required > guard:
        raise GuardExceededError(required, guard, "shuffle-term evaluations")


def certify_zero(
    outer: MultiLinearOp,
    inner: MultiLinearOp,
    guard: int = DEFAULT_GUARD,
    workers: int = DEFAULT_THREADS,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> Certificate:
    """
    Decides insertion_action(outer, inner, .) == 0 on all smooth functions.

    Raises:
        GuardExceededError: shuffle terms x tuples exceeds guard
    """
    if outer.dimension != inner.dimension:
        raise DimensionMismatchError(outer.dimension, inner.dimension, "inner operator")
    bound = certification_bound(outer, inner)
    tuple_count, term_count, required = required_work(outer, inner)
    _check_guard(required, guard)

    basis = monomial_basis(outer.dimension, bound)
    evaluator = JacobiatorEvaluator(outer, inner, basis)
    logger.info(
        "certifying arity %d with M=%d: %d tuples x %d shuffle terms",
        evaluator.arity, bound, tuple_count, term_count,
    )
    start = time.perf_counter()
    checked, witnesses = _scan(
        evaluator, combinations(range(len(basis)), evaluator.arity), basis, workers, max_witnesses
    )
    elapsed = time.perf_counter() - start
    if workers <= 1:
        logger.info("caches: %d inner values, %d cofactor sets", *evaluator.cache_sizes())
    return Certificate(
        verdict=NONZERO if witnesses else ZERO,
        basis_bound=bound,
        tuples_checked=checked,
        witnesses=witnesses,
        elapsed=elapsed,
        total_tuples=tuple_count,
    )


def certify_proportional(
    outer: MultiLinearOp,
    inner: MultiLinearOp,
    reference: MultiLinearOp,
    factor=1,
    guard: int = DEFAULT_GUARD,
    workers: int = DEFAULT_THREADS,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> Certificate:
    """
    Certifies the operator identity Delta[Nabla] == factor * reference.

    Verdict "zero" means the difference vanishes identically; witnesses
    carry the nonzero difference otherwise.
    """
    arity = jacobiator_arity(outer, inner)
    if reference.arity != arity:
        raise ArityMismatchError(arity, reference.arity)
    if reference.dimension != outer.dimension:
        raise DimensionMismatchError(outer.dimension, reference.dimension, "reference operator")
    factor = Fraction(factor)
    bound = max(certification_bound(outer, inner), reference.order)
    basis = monomial_basis(outer.dimension, bound)
    tuple_count = comb(len(basis), arity)
    _check_guard(tuple_count * comb(arity, inner.arity), guard)

    residual = ProportionalResidual(JacobiatorEvaluator(outer, inner, basis), reference, factor)

    start = time.perf_counter()
    checked, witnesses = _scan(residual, combinations(range(len(basis)), arity), basis, workers, max_witnesses)
    return Certificate(
        verdict=NONZERO if witnesses else ZERO,
        basis_bound=bound,
        tuples_checked=checked,
        witnesses=witnesses,
        elapsed=time.perf_counter() - start,
        mode="identity",
        total_tuples=tuple_count,
    )


# =============================================================================
# RANDOMIZED PRE-SCREEN
# =============================================================================

def random_check(
    outer: MultiLinearOp,
    inner: MultiLinearOp,
    trials: int,
    max_degree: int,
    seed: int = DEFAULT_SEED,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
) -> Certificate:
    """
    Evaluates the Jacobiator on `trials` tuples of random polynomials
    (integer coefficients in [-9, 9], per-variable degree <= max_degree).
    Never certifying: a zero verdict is evidence, not proof.
    """
    if outer.dimension != inner.dimension:
        raise DimensionMismatchError(outer.dimension, inner.dimension, "inner operator")
    bound = certification_bound(outer, inner)
    if max_degree < bound:
        logger.warning(
            "random_check max_degree %d is below the certification bound %d; "
            "zero verdicts are weak evidence", max_degree, bound,
        )
    from app.utils.random_polys import make_rng, random_polynomial

    rng = make_rng(seed)
    arity = jacobiator_arity(outer, inner)
    witnesses: List[Witness] = []
    checked = 0
    start = time.perf_counter()
    for trial in range(trials):
        args = tuple(random_polynomial(rng, outer.dimension, max_degree) for _ in range(arity))
        value = insertion_action(outer, inner, args)
        checked += 1
        if not value.is_zero():
            witnesses.append(Witness(args, value, trial))
            if len(witnesses) >= max_witnesses:
                break
    return Certificate(
        verdict=NONZERO if witnesses else ZERO,
        basis_bound=bound,
        tuples_checked=checked,
        witnesses=witnesses,
        elapsed=time.perf_counter() - start,
        certifying=False,
        mode="random",
        seed=seed,
        trials=trials,
        max_degree=max_degree,
    )
