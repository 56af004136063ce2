"""Test greedy maximal subset module."""

import pytest

from circumradii.experiments.generators import GeneratorConfig, generate_instance
from circumradii.geometry.base import Point
from circumradii.geometry.exceptions import NotGeneralPositionError
from circumradii.subsets.base import (
    ExclusionCase,
    is_distinct_subset,
    triple_radius_table,
)
from circumradii.subsets.certificates import verify_certificate
from circumradii.subsets.greedy import greedy_maximal_subset
from circumradii.tests.conftest import make_points


def test_greedy_three_points() -> None:
    """Test three non-collinear points are all chosen."""
    certificate = greedy_maximal_subset(points=make_points([(0, 0), (5, 1), (2, 7)]))
    assert certificate.chosen == (0, 1, 2)
    assert certificate.exclusions == {}
    assert certificate.maximal and not certificate.optimal


@pytest.mark.parametrize(
    "order, expected_chosen, excluded, expected_case",
    [
        (None, (0, 1, 2), 3, ExclusionCase.CASE_CIRCLE),
        ([3, 2, 1, 0], (1, 2, 3), 0, ExclusionCase.CASE_LOCUS),
    ],
)
def test_greedy_mirror(
    mirror_points: list[Point],
    order: list[int],
    expected_chosen: tuple,
    excluded: int,
    expected_case: ExclusionCase,
) -> None:
    """Test greedy subsets of the mirror pair instance.

    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    :param order: scan order
    :type order: list[int]
    :param expected_chosen: expected subset
    :type expected_chosen: tuple
    :param excluded: excluded index
    :type excluded: int
    :param expected_case: expected exclusion case
    :type expected_case: ExclusionCase
    """
    certificate = greedy_maximal_subset(points=mirror_points, order=order)
    assert certificate.chosen == expected_chosen
    assert list(certificate.exclusions) == [excluded]
    assert certificate.exclusions[excluded].case is expected_case
    assert verify_certificate(points=mirror_points, certificate=certificate)


def test_greedy_locus_case(locus_points: list[Point]) -> None:
    """Test the mirrored segments instance yields a locus exclusion.

    :param locus_points: locus instance
    :type locus_points: list[Point]
    """
    record = greedy_maximal_subset(points=locus_points).exclusions[3]
    assert record.case is ExclusionCase.CASE_LOCUS
    assert record.pair == (0, 1)
    assert record.match == (0, 2)


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4, 5])
def test_greedy_is_maximal(seed: int) -> None:
    """Test no excluded point can be added to a greedy subset.

    :param seed: seed
    :type seed: int
    """
    points = generate_instance(GeneratorConfig(seed=seed, n=9, grid=30))
    certificate = greedy_maximal_subset(points=points, order=range(8, -1, -1))
    table = triple_radius_table(points=points)
    assert is_distinct_subset(table=table, chosen=certificate.chosen)
    for idx in certificate.exclusions:
        assert not is_distinct_subset(table=table, chosen=(*certificate.chosen, idx))
    assert verify_certificate(points=points, certificate=certificate)


def test_greedy_not_general_position() -> None:
    """Test greedy rejects four concyclic points."""
    with pytest.raises(NotGeneralPositionError):
        greedy_maximal_subset(points=make_points([(0, 0), (1, 0), (1, 1), (0, 1)]))


@pytest.mark.parametrize("order", [[0, 1, 2], [0, 1, 2, 2], [0, 1, 2, 4]])
def test_greedy_invalid_order(mirror_points: list[Point], order: list[int]) -> None:
    """Test scan orders must be permutations.

    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    :param order: invalid scan order
    :type order: list[int]
    """
    with pytest.raises(ValueError):
        greedy_maximal_subset(points=mirror_points, order=order)
