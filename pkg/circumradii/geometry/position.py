"""General position module."""

import itertools
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from circumradii.geometry.base import Point, PositionMode
from circumradii.geometry.exceptions import DuplicatePointError
from circumradii.geometry.predicates import circle_through, orientation


class PositionReport(NamedTuple):
    """Outcome of a general position check."""

    ok: bool
    witness: Optional[Tuple[int, ...]]
    mode: PositionMode


def check_points(points: Sequence[Point]) -> None:
    """Check a point list holds pairwise distinct :class:`Point` objects.

    :param points: points
    :type points: Sequence[Point]
    :raises TypeError: Type error exception
    :raises DuplicatePointError: Duplicate point exception
    """
    if not all(isinstance(point, Point) for point in points):
        raise TypeError("points must be a sequence of Point.")
    seen: dict[Point, int] = {}
    for idx, point in enumerate(points):
        if point in seen:
            raise DuplicatePointError(
                f"points {seen[point]} and {idx} coincide at {point}."
            )
        seen[point] = idx


def is_general_position(
    points: Sequence[Point],
    mode: Union[PositionMode, str] = PositionMode.PAPER,
) -> PositionReport:
    """Check whether points are in general position.

    Triples are scanned in lexicographic order. In ``STRICT`` mode a collinear
    triple is reported as soon as it is reached; otherwise every fourth point
    with a larger index is tested against the generalized circle through the
    triple, so the witness is the first violating tuple in that order.

    :param points: points
    :type points: Sequence[Point]
    :param mode: general position convention, defaults to PAPER
    :type mode: Union[PositionMode, str]
    :raises DuplicatePointError: Duplicate point exception
    :return: position report
    :rtype: PositionReport
    """
    mode = PositionMode(mode)
    check_points(points)
    n = len(points)
    for i, j, k in itertools.combinations(range(n), 3):
        a, b, c = points[i], points[j], points[k]
        if mode is PositionMode.STRICT and orientation(a, b, c) == 0:
            return PositionReport(ok=False, witness=(i, j, k), mode=mode)
        circle = circle_through(a, b, c)
        for m in range(k + 1, n):
            if circle.contains(points[m]):
                return PositionReport(ok=False, witness=(i, j, k, m), mode=mode)
    return PositionReport(ok=True, witness=None, mode=mode)
