"""Greedy maximal subset module."""

import itertools
from typing import Optional, Sequence

from circumradii.geometry.base import ExtendedSqRadius, Point, PositionMode
from circumradii.geometry.exceptions import NotGeneralPositionError
from circumradii.geometry.position import is_general_position
from circumradii.subsets.base import (
    ExclusionRecord,
    SubsetCertificate,
    TripleRadiusTable,
)
from circumradii.subsets.classification import find_exclusion
from circumradii.subsets.exceptions import NoCoincidenceError
from circumradii.utils.logger import logger


def check_general_position(points: Sequence[Point]) -> None:
    """Check points are in general position (PAPER mode).

    :param points: points
    :type points: Sequence[Point]
    :raises NotGeneralPositionError: Not general position exception
    """
    report = is_general_position(points=points, mode=PositionMode.PAPER)
    if not report.ok:
        raise NotGeneralPositionError(
            f"points {report.witness} lie on a common line or circle."
        )


def check_order(order: Sequence[int], num_points: int) -> None:
    """Check a scan order is a permutation of the point indices.

    :param order: scan order
    :type order: Sequence[int]
    :param num_points: number of points
    :type num_points: int
    :raises ValueError: Value error exception
    """
    if sorted(order) != list(range(num_points)):
        raise ValueError(f"order must be a permutation of 0..{num_points - 1}.")


def build_certificate(
    table: TripleRadiusTable,
    chosen: Sequence[int],
    optimal: bool,
) -> SubsetCertificate:
    """Build a maximal certificate, classifying every excluded point.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :param chosen: indices of a maximal distinct-radii subset
    :type chosen: Sequence[int]
    :param optimal: optimality flag
    :type optimal: bool
    :raises NoCoincidenceError: No coincidence exception
    :return: subset certificate
    :rtype: SubsetCertificate
    """
    members = tuple(sorted(chosen))
    exclusions: dict[int, ExclusionRecord] = {}
    for x_index in range(table.num_points):
        if x_index in members:
            continue
        record = find_exclusion(table=table, chosen=members, x_index=x_index)
        if record is None:
            raise NoCoincidenceError(
                f"point {x_index} can be added to subset {members}."
            )
        exclusions[x_index] = record
    return SubsetCertificate(
        chosen=members,
        distinct_ok=True,
        maximal=True,
        optimal=optimal,
        exclusions=exclusions,
    )


def greedy_scan(table: TripleRadiusTable, order: Sequence[int]) -> list[int]:
    """Scan points in order, keeping each one that leaves all radii distinct.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :param order: scan order
    :type order: Sequence[int]
    :return: chosen indices in scan order
    :rtype: list[int]
    """
    chosen: list[int] = []
    used: set[ExtendedSqRadius] = set()
    for candidate in order:
        new: set[ExtendedSqRadius] = set()
        for pair in itertools.combinations(chosen, 2):
            radius = table[(*pair, candidate)]
            if radius in used or radius in new:
                break
            new.add(radius)
        else:
            chosen.append(candidate)
            used |= new
    return chosen


def greedy_maximal_subset(
    points: Sequence[Point],
    order: Optional[Sequence[int]] = None,
    table: Optional[TripleRadiusTable] = None,
) -> SubsetCertificate:
    """Greedy maximal distinct-radii subset.

    :param points: points in general position
    :type points: Sequence[Point]
    :param order: scan order, defaults to None (input order)
    :type order: Optional[Sequence[int]]
    :param table: precomputed triple radius table, defaults to None
    :type table: Optional[TripleRadiusTable]
    :raises NotGeneralPositionError: Not general position exception
    :raises ValueError: Value error exception
    :return: maximal subset certificate
    :rtype: SubsetCertificate
    """
    check_general_position(points=points)
    order = list(range(len(points))) if order is None else list(order)
    check_order(order=order, num_points=len(points))
    table = table if table is not None else TripleRadiusTable(points=points)
    chosen = greedy_scan(table=table, order=order)
    logger.debug("Greedy scan kept %s of %s points", len(chosen), len(points))
    return build_certificate(table=table, chosen=chosen, optimal=False)
