"""
Theorem Case Classifier
Decides which vanishing theorem covers a pair (outer, inner) of
(in)complete Wronskians. The roles are swapped first, if needed, so that
the inner order is the senior one: l_in >= k_out. On equal orders the
larger spec goes inner, so the tag does not depend on argument order;
equal orders and sizes never swap.
"""

from dataclasses import dataclass
from enum import Enum

from app.modules.errors import DimensionMismatchError
from app.modules.jets.spec import WronskianSpec, is_admissible, missing_top_count


class TheoremTag(str, Enum):
    COMPLETE_COMPLETE = "Thm_complete_complete"
    COMPLETE_INNER = "Thm_complete_inner"
    ENOUGH_OUTER = "Thm_enough_outer"
    INSUFFICIENT_OUTER = "Thm_insufficient_outer"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class TheoremCase:
    tag: TheoremTag
    swapped: bool
    missing_top: int

    def to_dict(self) -> dict:
        return {"tag": self.tag.value, "swapped": self.swapped, "missing_top": self.missing_top}


def classify_pair(spec_out: WronskianSpec, spec_in: WronskianSpec) -> TheoremCase:
    """
    Tags the pair with the theorem that predicts its Jacobiator vanishes.

    Rules, after the swap:
        NotCovered              either spec lacks a first-order index
        Thm_complete_complete   both complete
        Thm_complete_inner      inner complete, outer incomplete
        Thm_enough_outer        inner incomplete, N_out - 1 > missing top
        Thm_insufficient_outer  inner incomplete, N_out - 1 <= missing top
    """
    if spec_out.dimension != spec_in.dimension:
        raise DimensionMismatchError(spec_out.dimension, spec_in.dimension, "inner spec")

    swapped = (spec_out.order, spec_out.size) > (spec_in.order, spec_in.size)
    outer, inner = (spec_in, spec_out) if swapped else (spec_out, spec_in)
    missing = missing_top_count(inner)

    if not (is_admissible(outer) and is_admissible(inner)):
        tag = TheoremTag.NOT_COVERED
    elif inner.is_complete and outer.is_complete:
        tag = TheoremTag.COMPLETE_COMPLETE
    elif inner.is_complete:
        tag = TheoremTag.COMPLETE_INNER
    elif outer.size - 1 > missing:
        tag = TheoremTag.ENOUGH_OUTER
    else:
        tag = TheoremTag.INSUFFICIENT_OUTER
    return TheoremCase(tag, swapped, missing)
