"""
Jacobiator Package
Insertion action of one Wronskian on another and exact or randomized
decision of whether it vanishes.
"""

from .shuffles import ShuffleTerm, permutation_sign, shuffle_count, shuffles
from .action import InsertionOperator, brute_force_action, insertion_action, jacobiator_arity
from .certify import (
    NONZERO,
    ZERO,
    Certificate,
    JacobiatorEvaluator,
    Witness,
    certification_bound,
    certify_proportional,
    certify_zero,
    monomial_basis,
    random_check,
    required_work,
)

__all__ = [
    "ShuffleTerm",
    "permutation_sign",
    "shuffle_count",
    "shuffles",
    "InsertionOperator",
    "brute_force_action",
    "insertion_action",
    "jacobiator_arity",
    "NONZERO",
    "ZERO",
    "Certificate",
    "JacobiatorEvaluator",
    "Witness",
    "certification_bound",
    "certify_proportional",
    "certify_zero",
    "monomial_basis",
    "random_check",
    "required_work",
]
