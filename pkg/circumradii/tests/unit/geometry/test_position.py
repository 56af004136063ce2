"""Test general position module."""

import pytest

from circumradii.geometry.base import Point, PositionMode
from circumradii.geometry.exceptions import DuplicatePointError
from circumradii.geometry.position import check_points, is_general_position
from circumradii.tests.conftest import make_points


@pytest.mark.parametrize(
    "coordinates, mode, expected_ok, expected_witness",
    [
        ([(0, 0), (1, 0), (1, 1), (0, 1)], PositionMode.PAPER, False, (0, 1, 2, 3)),
        ([(0, 0), (1, 0), (2, 0), (5, 7)], PositionMode.STRICT, False, (0, 1, 2)),
        ([(0, 0), (1, 0), (2, 0), (5, 7)], PositionMode.PAPER, True, None),
        ([(0, 0), (1, 0), (2, 0), (3, 0)], "paper", False, (0, 1, 2, 3)),
        ([(0, 0), (4, 0), (1, 3), (1, -3)], "strict", True, None),
    ],
)
def test_is_general_position(
    coordinates: list[tuple],
    mode: PositionMode,
    expected_ok: bool,
    expected_witness: tuple,
) -> None:
    """Test general position report.

    :param coordinates: points
    :type coordinates: list[tuple]
    :param mode: general position convention
    :type mode: PositionMode
    :param expected_ok: expected flag
    :type expected_ok: bool
    :param expected_witness: expected witness
    :type expected_witness: tuple
    """
    report = is_general_position(points=make_points(coordinates), mode=mode)
    assert report.ok is expected_ok
    assert report.witness == expected_witness
    assert report.mode is PositionMode(mode)


def test_is_general_position_duplicate_point() -> None:
    """Test general position rejects repeated points."""
    with pytest.raises(DuplicatePointError):
        is_general_position(points=make_points([(0, 0), (1, 2), (0, 0)]))


def test_check_points_invalid_type() -> None:
    """Test point lists must hold points."""
    with pytest.raises(TypeError):
        check_points([Point(0, 0), (1, 1)])  # type: ignore


def test_invalid_mode() -> None:
    """Test unknown general position convention."""
    with pytest.raises(ValueError):
        is_general_position(points=make_points([(0, 0)]), mode="loose")
