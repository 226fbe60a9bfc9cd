"""
Jet Combinatorics Package
Multi-indices, Wronskian row specs and theorem-case classification.
"""

from .multi_index import (
    MultiIndex,
    enumerate_multi_indices,
    format_multi_index,
    indices_of_order,
    jet_fibre_dim,
    order,
)
from .spec import (
    ADMISSIBILITY_CONDITION,
    WronskianSpec,
    complete_spec,
    enumerate_specs,
    format_spec,
    growth_chain,
    is_admissible,
    make_relaxed_spec,
    make_spec,
    missing_top_count,
    parse_multi_indices,
    parse_spec_text,
)
from .classify import TheoremCase, TheoremTag, classify_pair

__all__ = [
    "MultiIndex",
    "enumerate_multi_indices",
    "format_multi_index",
    "indices_of_order",
    "jet_fibre_dim",
    "order",
    "ADMISSIBILITY_CONDITION",
    "WronskianSpec",
    "complete_spec",
    "enumerate_specs",
    "format_spec",
    "growth_chain",
    "is_admissible",
    "make_relaxed_spec",
    "make_spec",
    "missing_top_count",
    "parse_multi_indices",
    "parse_spec_text",
    "TheoremCase",
    "TheoremTag",
    "classify_pair",
]
