"""
Wronskian Package
Generalized Wronskian operators, exact determinants and orthant-wise
evaluation of |x|-type families.
"""

from .determinant import det_bareiss, det_laplace
from .operator import (
    INCONCLUSIVE,
    INDEPENDENT,
    MultiLinearOp,
    WronskianOperator,
    apply,
    check_arguments,
    independence_witness,
)
from .orthant import OrthantFamily, apply_orthant, format_sign_vector, peano_case, sign_vectors

__all__ = [
    "det_bareiss",
    "det_laplace",
    "INCONCLUSIVE",
    "INDEPENDENT",
    "MultiLinearOp",
    "WronskianOperator",
    "apply",
    "check_arguments",
    "independence_witness",
    "OrthantFamily",
    "apply_orthant",
    "format_sign_vector",
    "peano_case",
    "sign_vectors",
]
