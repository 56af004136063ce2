"""Test certificate verification module."""

import pytest

from circumradii.geometry.base import Point
from circumradii.subsets.base import ExclusionCase, ExclusionRecord, SubsetCertificate
from circumradii.subsets.branch_and_bound import max_distinct_subset
from circumradii.subsets.certificates import verify_certificate
from circumradii.subsets.greedy import greedy_maximal_subset


def test_verify_reloaded_certificate(mirror_points: list[Point]) -> None:
    """Test a serialized certificate verifies after reloading.

    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    """
    certificate = max_distinct_subset(points=mirror_points)
    reloaded = SubsetCertificate.from_dict(certificate.to_dict())
    assert verify_certificate(points=mirror_points, certificate=reloaded)


@pytest.mark.parametrize(
    "changes",
    [
        {"chosen": (0, 1, 2, 3), "exclusions": {}},
        {"chosen": (0, 1, 5)},
        {"chosen": (2, 1, 0)},
        {"distinct_ok": False},
        {"exclusions": {}},
        {
            "exclusions": {
                3: ExclusionRecord(
                    case=ExclusionCase.CASE_LOCUS, x_index=3, pair=(0, 1), match=(0, 2)
                )
            }
        },
        {
            "exclusions": {
                3: ExclusionRecord(
                    case=ExclusionCase.CASE_CIRCLE,
                    x_index=3,
                    pair=(0, 2),
                    match=(0, 1, 2),
                )
            }
        },
    ],
)
def test_verify_tampered_certificate(
    mirror_points: list[Point],
    changes: dict,
) -> None:
    """Test every tampered claim is caught.

    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    :param changes: fields replaced in a valid certificate
    :type changes: dict
    """
    certificate = greedy_maximal_subset(points=mirror_points)._replace(**changes)
    assert not verify_certificate(points=mirror_points, certificate=certificate)


def test_verify_false_optimality(circle_points: list[Point]) -> None:
    """Test a non-maximum subset claimed optimal is rejected.

    :param circle_points: circle instance
    :type circle_points: list[Point]
    """
    certificate = SubsetCertificate(
        chosen=(0, 1), distinct_ok=True, maximal=False, optimal=True, exclusions={}
    )
    assert not verify_certificate(points=circle_points, certificate=certificate)
    assert verify_certificate(
        points=circle_points, certificate=certificate._replace(optimal=False)
    )


def test_verify_optimality_lexicographic_winner(mirror_points: list[Point]) -> None:
    """Test an optimum that is not the lexicographic winner is rejected.

    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    """
    certificate = greedy_maximal_subset(points=mirror_points, order=(3, 2, 1, 0))
    assert certificate.chosen == (1, 2, 3)
    assert certificate.size == max_distinct_subset(points=mirror_points).size
    assert verify_certificate(points=mirror_points, certificate=certificate)
    assert not verify_certificate(
        points=mirror_points, certificate=certificate._replace(optimal=True)
    )
