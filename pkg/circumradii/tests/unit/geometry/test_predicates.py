"""Test predicates module."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from circumradii.geometry.base import INFINITE, ExtendedSqRadius, Point
from circumradii.geometry.exceptions import (
    DuplicatePointError,
    NotGeneralPositionError,
)
from circumradii.geometry.predicates import (
    circle_through,
    circumcenter,
    concyclic,
    orientation,
    squared_area,
    squared_circumradius,
    squared_distance,
)
from circumradii.tests.conftest import make_points

NUM_FUZZED_TRIPLES = 300


def fuzzed_triples(
    seed: int = 31,
    num_triples: int = NUM_FUZZED_TRIPLES,
) -> list[tuple[Point, Point, Point]]:
    """Seeded non-degenerate rational triples.

    :param seed: seed
    :type seed: int
    :param num_triples: number of triples
    :type num_triples: int
    :return: triples of distinct points
    :rtype: list[tuple[Point, Point, Point]]
    """
    rng = np.random.default_rng(seed)
    triples = []
    while len(triples) < num_triples:
        numerators = rng.integers(-50, 50, size=6)
        denominators = rng.integers(1, 8, size=6)
        coordinates = [
            Fraction(int(n), int(d)) for n, d in zip(numerators, denominators)
        ]
        a, b, c = (Point(*coordinates[i : i + 2]) for i in range(0, 6, 2))
        if len({a, b, c}) == 3:
            triples.append((a, b, c))
    return triples


def assert_radius_invariance(a: Point, b: Point, c: Point) -> None:
    """Assert permutation, translation, reflection and scaling behaviour.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    """
    shift = (Fraction(7, 3), Fraction(-5, 2))
    factor = Fraction(-3, 5)
    radius = squared_circumradius(a, b, c)
    for permutation in itertools.permutations((a, b, c)):
        assert squared_circumradius(*permutation) == radius
    translated = [point.translate(*shift) for point in (a, b, c)]
    assert squared_circumradius(*translated) == radius
    for reflect in (lambda p: Point(p.x, -p.y), lambda p: Point(-p.x, p.y)):
        assert squared_circumradius(*map(reflect, (a, b, c))) == radius
    scaled = squared_circumradius(*(point.scale(factor) for point in (a, b, c)))
    if radius.is_infinite:
        assert scaled.is_infinite
    else:
        assert scaled.value == radius.value * factor**2


def _through_a(h: Fraction, slope: Fraction) -> Point:
    # second intersection of the line through (-1, 0) with slope `slope` and
    # the circle through (-1, 0) and (1, 0) centered at (0, h)
    x = (1 - slope**2 + 2 * h * slope) / (1 + slope**2)
    return Point(x, slope * (x + 1))


def assert_shared_edge_concyclic(
    h: Fraction,
    slopes: tuple[Fraction, Fraction, Fraction],
) -> None:
    """Assert three equal-radius triangles on one edge put four points on a circle.

    Slopes must avoid 0, h, -h, 1/h and -1/h so that no vertex repeats.

    :param h: height of the circle centers above and below the shared edge
    :type h: Fraction
    :param slopes: slopes of the chords through (-1, 0)
    :type slopes: tuple[Fraction, Fraction, Fraction]
    """
    a, b = Point(-1, 0), Point(1, 0)
    c = _through_a(h, slopes[0])
    d = _through_a(h, slopes[1])
    e = _through_a(-h, slopes[2])
    radii = {squared_circumradius(a, b, point) for point in (c, d, e)}
    assert radii == {ExtendedSqRadius.finite(1 + h**2)}
    assert any(
        concyclic(*quadruple)
        for quadruple in itertools.combinations((a, b, c, d, e), 4)
    )


@pytest.mark.parametrize(
    "coordinates, expected",
    [
        ([(0, 0), (1, 0), (0, 1)], 1),
        ([(0, 0), (1, 0), (2, 0)], 0),
        ([(0, 0), (0, 1), (1, 0)], -1),
    ],
)
def test_orientation(coordinates: list[tuple], expected: int) -> None:
    """Test orientation sign.

    :param coordinates: triple coordinates
    :type coordinates: list[tuple]
    :param expected: expected sign
    :type expected: int
    """
    assert orientation(*make_points(coordinates)) == expected


@pytest.mark.parametrize(
    "coordinates, expected",
    [
        ([(0, 0), (4, 0), (0, 3)], 36),
        ([(0, 0), (1, 0), (2, 0)], 0),
        ([(0, 0), (1, 0), ("1/2", "1/2")], Fraction(1, 16)),
    ],
)
def test_squared_area(coordinates: list[tuple], expected: Fraction) -> None:
    """Test squared triangle area.

    :param coordinates: triple coordinates
    :type coordinates: list[tuple]
    :param expected: expected squared area
    :type expected: Fraction
    """
    assert squared_area(*make_points(coordinates)) == expected


@pytest.mark.parametrize(
    "coordinates, expected",
    [
        ([(0, 0), (4, 0), (0, 3)], ExtendedSqRadius.finite(Fraction(25, 4))),
        ([(0, 0), (1, 0), (2, 0)], INFINITE),
        ([(0, 0), (4, 0), (1, 3)], ExtendedSqRadius.finite(5)),
    ],
)
def test_squared_circumradius(
    coordinates: list[tuple],
    expected: ExtendedSqRadius,
) -> None:
    """Test squared circumradius.

    :param coordinates: triple coordinates
    :type coordinates: list[tuple]
    :param expected: expected squared circumradius
    :type expected: ExtendedSqRadius
    """
    assert squared_circumradius(*make_points(coordinates)) == expected


def test_squared_circumradius_duplicate_point() -> None:
    """Test squared circumradius rejects repeated points."""
    with pytest.raises(DuplicatePointError):
        squared_circumradius(Point(0, 0), Point(1, 1), Point(0, 0))


def test_squared_circumradius_invariance() -> None:
    """Test permutation, translation, reflection and scaling behaviour."""
    for a, b, c in fuzzed_triples():
        assert_radius_invariance(a, b, c)


def test_squared_circumradius_matches_circumcenter() -> None:
    """Test squared circumradius against the solved circumcenter."""
    for a, b, c in fuzzed_triples(seed=7):
        radius = squared_circumradius(a, b, c)
        if radius.is_infinite:
            with pytest.raises(NotGeneralPositionError):
                circumcenter(a, b, c)
            continue
        center = circumcenter(a, b, c)
        for vertex in (a, b, c):
            assert squared_distance(center, vertex) == radius.value


@pytest.mark.parametrize(
    "coordinates, expected",
    [
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], True),
        ([(0, 0), (1, 0), (2, 0), (3, 0)], True),
        ([(0, 0), (4, 0), (0, 3), (1, 1)], False),
    ],
)
def test_concyclic(coordinates: list[tuple], expected: bool) -> None:
    """Test concyclicity.

    :param coordinates: four points
    :type coordinates: list[tuple]
    :param expected: expected flag
    :type expected: bool
    """
    assert concyclic(*make_points(coordinates)) is expected


def test_circle_through_collinear_is_line() -> None:
    """Test the generalized circle of a collinear triple is a line."""
    circle = circle_through(Point(0, 0), Point(1, 1), Point(2, 2))
    assert circle.is_line
    assert circle.contains(Point(-5, -5))
    assert not circle.contains(Point(1, 0))


@pytest.mark.parametrize(
    "h",
    [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2), Fraction(5, 7)],
)
def test_shared_edge_equal_radii_force_concyclic(h: Fraction) -> None:
    """Test three equal-radius triangles on one edge put four points on a circle.

    :param h: height of the circle centers above and below the shared edge
    :type h: Fraction
    """
    assert_shared_edge_concyclic(h, (Fraction(3), Fraction(4), Fraction(5)))
