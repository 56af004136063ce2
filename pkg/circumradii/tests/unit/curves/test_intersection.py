"""Test curve intersection counting module."""

from fractions import Fraction

import numpy as np  # type: ignore
import pytest

from circumradii.curves.exceptions import ZeroPolynomialError
from circumradii.curves.intersection import (
    IntersectionStatus,
    count_common_points,
    draw_shear,
    resultant_eliminate_y,
    share_component,
    sturm_distinct_real_roots,
)
from circumradii.curves.locus import circle_poly, radius_locus
from circumradii.curves.polynomials import BivariatePoly, UnivariatePoly
from circumradii.geometry.base import Point

x, y = BivariatePoly.x(), BivariatePoly.y()
unit_circle = circle_poly(center=Point(0, 0), r2=1)
shifted_circle = circle_poly(center=Point(1, 0), r2=1)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (x**2 + y**2 - 1, x**2 + y**2 - 4, (9,)),
        (unit_circle, shifted_circle, (1, -4, 4)),
        (x - Fraction(1, 2), unit_circle, (Fraction(1, 4), -1, 1)),
        (unit_circle, unit_circle, ()),
        (x**6 - 1, x**6 - 1, ()),
        ((x - 2) * (y - 1), (x - 2) * (y + 1), ()),
        (x - 1, x + 1, (1,)),
    ],
)
def test_resultant_eliminate_y(
    p: BivariatePoly,
    q: BivariatePoly,
    expected: tuple,
) -> None:
    """Test resultants with respect to y.

    :param p: first polynomial
    :type p: BivariatePoly
    :param q: second polynomial
    :type q: BivariatePoly
    :param expected: expected coefficients, lowest degree first
    :type expected: tuple
    """
    assert resultant_eliminate_y(p, q).coefficients == expected


@pytest.mark.parametrize(
    "coefficients, expected",
    [
        ([-2, 0, 1], 2),
        ([1, 0, 1], 0),
        ([-3, 7, -5, 1], 2),
        ([5], 0),
        ([0, 0, 0, 1], 1),
    ],
)
def test_sturm_distinct_real_roots(coefficients: list[int], expected: int) -> None:
    """Test distinct real root counts.

    :param coefficients: coefficients, lowest degree first
    :type coefficients: list[int]
    :param expected: expected number of distinct real roots
    :type expected: int
    """
    assert sturm_distinct_real_roots(UnivariatePoly(coefficients)) == expected


def test_sturm_zero_polynomial() -> None:
    """Test the zero polynomial has no finite root count."""
    with pytest.raises(ZeroPolynomialError):
        sturm_distinct_real_roots(UnivariatePoly([]))


@pytest.mark.parametrize(
    "shear_seed, expected_count",
    [
        (None, 1),
        (3, 2),
        (2024, 2),
    ],
)
def test_count_two_circles(shear_seed: int, expected_count: int) -> None:
    """Test two unit circles meet in two points sharing their abscissa.

    :param shear_seed: shear seed
    :type shear_seed: int
    :param expected_count: expected distinct x-root count
    :type expected_count: int
    """
    report = count_common_points(unit_circle, shifted_circle, shear_seed=shear_seed)
    assert report.status is IntersectionStatus.FINITE
    assert report.x_root_count == expected_count
    assert report.bezout_bound == 4
    assert report.shear_used == draw_shear(shear_seed=shear_seed)


def test_count_common_component() -> None:
    """Test a shared factor is reported as a common component."""
    report = count_common_points(unit_circle, unit_circle * (x - y), shear_seed=1)
    assert report.status is IntersectionStatus.COMMON_COMPONENT
    assert report.x_root_count == 0
    assert report.to_dict()["resultant_degree"] is None


def test_count_line_and_circle() -> None:
    """Test a horizontal chord meets the unit circle twice."""
    report = count_common_points(y - Fraction(1, 2), unit_circle)
    assert report.x_root_count == 2
    assert report.to_dict() == {
        "status": "FINITE",
        "x_root_count": 2,
        "bezout_bound": 2,
        "shear_used": "0/1",
        "resultant_degree": 2,
    }


def test_count_zero_polynomial() -> None:
    """Test the zero polynomial defines no curve."""
    with pytest.raises(ZeroPolynomialError):
        count_common_points(BivariatePoly.zero(), unit_circle)


def test_draw_shear() -> None:
    """Test shear parameters are deterministic and nonzero when seeded."""
    assert draw_shear(shear_seed=None) == 0
    assert draw_shear(shear_seed=5) == draw_shear(shear_seed=5)
    assert draw_shear(shear_seed=5) != 0


def _mirrored_locus(a: Point, b: Point) -> BivariatePoly:
    # {C, D} is the reflection of {A, B} across x = 2
    return radius_locus(a, b, Point(4 - a.x, a.y), Point(4 - b.x, b.y))


@pytest.mark.parametrize("shear_seed", [None, 0, 7])
def test_count_vertical_common_component(shear_seed: int) -> None:
    """Test loci sharing the vertical mirror line report a common component.

    :param shear_seed: shear seed
    :type shear_seed: int
    """
    p = _mirrored_locus(Point(0, 1), Point(1, 3))
    q = _mirrored_locus(Point(0, -2), Point(1, 5))
    assert share_component(p, q)
    report = count_common_points(p, q, shear_seed=shear_seed)
    assert report.status is IntersectionStatus.COMMON_COMPONENT
    assert report.x_root_count == 0


def test_share_component() -> None:
    """Test non-constant common factors are detected in either variable."""
    assert share_component(unit_circle * (x - 3), shifted_circle * (x - 3))
    assert share_component(x**6 - 1, x + 1)
    assert not share_component(unit_circle, shifted_circle)
    assert not share_component(BivariatePoly.constant(5), unit_circle)


@pytest.mark.parametrize("seed", range(10))
def test_resultant_vanishes_at_shared_roots(seed: int) -> None:
    """Test the resultant vanishes where both fibres share a root.

    Both polynomials vanish at (x0, y0) by construction.

    :param seed: seed value
    :type seed: int
    """
    rng = np.random.default_rng(seed)
    x0, y0, a, b = (int(value) for value in rng.integers(-5, 6, size=4))
    r1, r2 = (
        int(c0) * x + int(c1) * y + int(c2)
        for c0, c1, c2 in rng.integers(-4, 5, size=(2, 3))
    )
    p = (y - y0) * (y - a) + (x - x0) * r1
    q = (y - y0) * (y - b - 1) * (y + 1) + (x - x0) * r2
    resultant = resultant_eliminate_y(p, q)
    assert resultant.evaluate(x0) == 0
