"""Distinct-radii subsets init."""

from .base import (
    ExclusionCase,
    ExclusionRecord,
    SubsetCertificate,
    TripleRadiusTable,
    is_distinct_subset,
    radius_conflicts,
    triple_radius_table,
)
from .branch_and_bound import exhaustive_max_subset, max_distinct_subset
from .certificates import verify_certificate
from .classification import classify_excluded_point
from .greedy import greedy_maximal_subset

__all__ = [
    "ExclusionCase",
    "ExclusionRecord",
    "SubsetCertificate",
    "TripleRadiusTable",
    "classify_excluded_point",
    "exhaustive_max_subset",
    "greedy_maximal_subset",
    "is_distinct_subset",
    "max_distinct_subset",
    "radius_conflicts",
    "triple_radius_table",
    "verify_certificate",
]
