"""Certificate verification module."""

import itertools
from typing import Sequence

from circumradii.geometry.base import ExtendedSqRadius, Point
from circumradii.geometry.exceptions import (
    DuplicatePointError,
    NotGeneralPositionError,
)
from circumradii.geometry.predicates import squared_circumradius
from circumradii.subsets.base import (
    ExclusionCase,
    ExclusionRecord,
    SubsetCertificate,
)
from circumradii.subsets.branch_and_bound import exhaustive_max_subset
from circumradii.utils.logger import logger

EXHAUSTIVE_LIMIT = 12  # largest instance whose optimality is re-checked


def _radius(points: Sequence[Point], indices: Sequence[int]) -> ExtendedSqRadius:
    a, b, c = (points[idx] for idx in indices)
    return squared_circumradius(a, b, c)


def _distinct(points: Sequence[Point], chosen: Sequence[int]) -> bool:
    radii = [_radius(points, triple) for triple in itertools.combinations(chosen, 3)]
    return len(set(radii)) == len(radii)


def _record_holds(
    points: Sequence[Point],
    chosen: set[int],
    x_index: int,
    record: ExclusionRecord,
) -> bool:
    if record.x_index != x_index or len(set(record.pair)) != 2:
        return False
    if not (set(record.pair) | set(record.match)) <= chosen:
        return False
    radius = _radius(points, (*record.pair, x_index))
    if record.case is ExclusionCase.CASE_CIRCLE:
        return len(set(record.match)) == 3 and radius == _radius(points, record.match)
    if len(set(record.match)) != 2 or set(record.match) == set(record.pair):
        return False
    return radius == _radius(points, (*record.match, x_index))


def _check_claims(points: Sequence[Point], certificate: SubsetCertificate) -> bool:
    chosen = certificate.chosen
    num_points = len(points)
    if list(chosen) != sorted(set(chosen)):
        return False
    if any(not 0 <= idx < num_points for idx in chosen):
        return False
    if certificate.distinct_ok != _distinct(points, chosen):
        return False
    if certificate.maximal:
        excluded = set(range(num_points)) - set(chosen)
        if not certificate.distinct_ok or set(certificate.exclusions) != excluded:
            return False
        if not all(
            _record_holds(points, set(chosen), idx, certificate.exclusions[idx])
            for idx in excluded
        ):
            return False
    if certificate.optimal:
        if num_points > EXHAUSTIVE_LIMIT:
            logger.warning(
                "Optimality not re-checked for %s points (limit %s)",
                num_points,
                EXHAUSTIVE_LIMIT,
            )
        else:
            if exhaustive_max_subset(points=points).chosen != tuple(chosen):
                return False
    return True


def verify_certificate(points: Sequence[Point], certificate: SubsetCertificate) -> bool:
    """Recompute every claim of a certificate from scratch.

    Distinctness, maximality and every exclusion equality are re-derived with
    the exact kernel; optimality is re-checked by exhaustive search for
    instances of at most ``EXHAUSTIVE_LIMIT`` points.

    :param points: points
    :type points: Sequence[Point]
    :param certificate: certificate to verify
    :type certificate: SubsetCertificate
    :return: True iff every claim holds
    :rtype: bool
    """
    try:
        return _check_claims(points=points, certificate=certificate)
    except (
        DuplicatePointError,
        NotGeneralPositionError,
        IndexError,
        KeyError,
        TypeError,
        ValueError,
    ) as e:
        logger.debug("Certificate rejected: %s", e)
        return False
