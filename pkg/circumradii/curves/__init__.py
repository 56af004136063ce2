"""Locus curves init."""

from .intersection import (
    IntersectionReport,
    IntersectionStatus,
    count_common_points,
    resultant_eliminate_y,
    share_component,
    sturm_distinct_real_roots,
)
from .locus import circle_poly, radius_locus, signed_area_poly, squared_distance_poly
from .polynomials import (
    BivariatePoly,
    UnivariatePoly,
    evaluate,
    square_free_part,
    total_degree,
)

__all__ = [
    "BivariatePoly",
    "IntersectionReport",
    "IntersectionStatus",
    "UnivariatePoly",
    "circle_poly",
    "count_common_points",
    "evaluate",
    "radius_locus",
    "resultant_eliminate_y",
    "share_component",
    "signed_area_poly",
    "square_free_part",
    "squared_distance_poly",
    "sturm_distinct_real_roots",
    "total_degree",
]
