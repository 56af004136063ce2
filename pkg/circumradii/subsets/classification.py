"""Excluded point classification module."""

import itertools
from typing import Optional, Sequence

from circumradii.geometry.base import ExtendedSqRadius, Point
from circumradii.subsets.base import (
    ExclusionCase,
    ExclusionRecord,
    Pair,
    SubsetCertificate,
    Triple,
    TripleRadiusTable,
)
from circumradii.subsets.exceptions import NoCoincidenceError


def find_exclusion(
    table: TripleRadiusTable,
    chosen: Sequence[int],
    x_index: int,
) -> Optional[ExclusionRecord]:
    """Find the first radius coincidence created by adding a point.

    Circle cases are scanned first over (pair, triple) in lexicographic
    order, then locus cases over pairs of pairs in lexicographic order.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :param chosen: indices of a distinct-radii subset
    :type chosen: Sequence[int]
    :param x_index: index of the point to add
    :type x_index: int
    :return: first coincidence, or None if the point can be added
    :rtype: Optional[ExclusionRecord]
    """
    members = sorted(chosen)
    first_triple: dict[ExtendedSqRadius, Triple] = {}
    for triple in itertools.combinations(members, 3):
        first_triple.setdefault(table[triple], triple)  # type: ignore

    pairs: list[Pair] = list(itertools.combinations(members, 2))  # type: ignore
    pair_radii = [table[(*pair, x_index)] for pair in pairs]

    for pair, radius in zip(pairs, pair_radii):
        if radius in first_triple:
            return ExclusionRecord(
                case=ExclusionCase.CASE_CIRCLE,
                x_index=x_index,
                pair=pair,
                match=first_triple[radius],
            )

    first_pair: dict[ExtendedSqRadius, Pair] = {}
    best: Optional[tuple[Pair, Pair]] = None
    for pair, radius in zip(pairs, pair_radii):
        if radius in first_pair:
            candidate = (first_pair[radius], pair)
            if best is None or candidate < best:
                best = candidate
        else:
            first_pair[radius] = pair
    if best is None:
        return None
    return ExclusionRecord(
        case=ExclusionCase.CASE_LOCUS,
        x_index=x_index,
        pair=best[0],
        match=best[1],
    )


def classify_excluded_point(
    points: Sequence[Point],
    certificate: SubsetCertificate,
    x_index: int,
    table: Optional[TripleRadiusTable] = None,
) -> ExclusionRecord:
    """Classify why an excluded point cannot join a maximal subset.

    :param points: points
    :type points: Sequence[Point]
    :param certificate: certificate of a maximal subset
    :type certificate: SubsetCertificate
    :param x_index: index of an excluded point
    :type x_index: int
    :param table: precomputed triple radius table, defaults to None
    :type table: Optional[TripleRadiusTable]
    :raises ValueError: Value error exception
    :raises NoCoincidenceError: No coincidence exception
    :return: exclusion record whose equality re-verifies exactly
    :rtype: ExclusionRecord
    """
    if not 0 <= x_index < len(points):
        raise ValueError(f"x_index must be in range 0..{len(points) - 1}.")
    if x_index in certificate.chosen:
        raise ValueError(f"point {x_index} belongs to the subset.")
    table = table if table is not None else TripleRadiusTable(points=points)
    record = find_exclusion(table=table, chosen=certificate.chosen, x_index=x_index)
    if record is None:
        raise NoCoincidenceError(
            f"point {x_index} can be added to subset {certificate.chosen}; "
            f"the subset is not maximal."
        )
    return record
