"""Configuration file for the tests."""

from typing import Callable, Sequence

import pytest

from circumradii.geometry import Point
from circumradii.utils import save_point_set


def make_points(coordinates: Sequence[tuple]) -> list[Point]:
    """Build points from coordinate pairs.

    :param coordinates: (x, y) pairs
    :type coordinates: Sequence[tuple]
    :return: points
    :rtype: list[Point]
    """
    return [Point(x, y) for x, y in coordinates]


@pytest.fixture(scope="function")
def mirror_points() -> list[Point]:
    """Two triangles mirrored across the x-axis sharing the edge 0-1.

    R^2(0, 1, 2) = R^2(0, 1, 3) = 5, so point 3 is excluded by a circle
    through points 0 and 1.

    :return: mirror pair instance
    :rtype: list[Point]
    """
    return make_points([(0, 0), (4, 0), (1, 3), (1, -3)])


@pytest.fixture(scope="function")
def locus_points() -> list[Point]:
    """Mirrored segments 0-1 and 0-2 with a point on the mirror axis.

    R^2(0, 1, 3) = R^2(0, 2, 3) = 5/2 while R^2(0, 1, 2) = 25/4, so point 3
    is excluded by the locus curve of pairs (0, 1) and (0, 2).

    :return: locus instance
    :rtype: list[Point]
    """
    return make_points([(0, 0), (1, 2), (1, -2), (3, 0)])


@pytest.fixture(scope="function")
def circle_points() -> list[Point]:
    """Point 3 on the circle of radius^2 5 through points 0 and 1.

    :return: circle instance
    :rtype: list[Point]
    """
    return make_points([(0, 0), (4, 0), (1, 3), (1, 1)])


@pytest.fixture(scope="function")
def point_set_file(tmp_path) -> Callable[[Sequence[Point], str], str]:  # type: ignore
    """Factory writing point set files in a temporary directory.

    :param tmp_path: temporary directory
    :type tmp_path: pathlib.Path
    :return: factory returning the written filename
    :rtype: Callable[[Sequence[Point], str], str]
    """

    def _write(points: Sequence[Point], name: str = "points.txt") -> str:
        filename = str(tmp_path / name)
        save_point_set(points=points, filename=filename)
        return filename

    return _write
