"""Bounds init."""

from .formulas import (
    BoundTable,
    asymptotic_ratio_check,
    bound_table,
    circle_case_bound,
    erdos_claimed_bound,
    erdos_stated_bound,
    lemma_m_bound,
    locus_case_bound,
    main_n_bound,
)

__all__ = [
    "BoundTable",
    "asymptotic_ratio_check",
    "bound_table",
    "circle_case_bound",
    "erdos_claimed_bound",
    "erdos_stated_bound",
    "lemma_m_bound",
    "locus_case_bound",
    "main_n_bound",
]
