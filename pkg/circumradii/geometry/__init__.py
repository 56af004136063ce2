"""Exact plane geometry init."""

from .base import INFINITE, ExtendedSqRadius, Point, PositionMode
from .position import PositionReport, check_points, is_general_position
from .predicates import (
    GeneralizedCircle,
    circle_through,
    circumcenter,
    concyclic,
    orientation,
    squared_area,
    squared_circumradius,
    squared_distance,
)

__all__ = [
    "INFINITE",
    "ExtendedSqRadius",
    "GeneralizedCircle",
    "Point",
    "PositionMode",
    "PositionReport",
    "check_points",
    "circle_through",
    "circumcenter",
    "concyclic",
    "is_general_position",
    "orientation",
    "squared_area",
    "squared_circumradius",
    "squared_distance",
]
