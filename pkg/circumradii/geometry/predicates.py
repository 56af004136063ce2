"""Exact geometric predicates module."""

from fractions import Fraction
from typing import NamedTuple, Union

from circumradii.geometry.base import (
    INFINITE,
    Coordinate,
    ExtendedSqRadius,
    Point,
)
from circumradii.geometry.exceptions import (
    DuplicatePointError,
    NotGeneralPositionError,
)

Scalar = Union[Coordinate, Fraction]


class GeneralizedCircle(NamedTuple):
    """Circle or line ``alpha*(x^2+y^2) + beta*x + gamma*y + delta = 0``.

    ``alpha`` is zero exactly when the defining triple is collinear, in which
    case the equation describes the line through it.
    """

    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar

    @property
    def is_line(self) -> bool:
        """Line flag property.

        :return: True if the circle degenerates to a line
        :rtype: bool
        """
        return self.alpha == 0

    def power(self, point: Point) -> Scalar:
        """Evaluate the defining equation at a point.

        :param point: point
        :type point: Point
        :return: value of the equation, zero iff the point lies on the curve
        :rtype: Scalar
        """
        x, y = point.x, point.y
        return (
            self.alpha * (x * x + y * y) + self.beta * x + self.gamma * y + self.delta
        )

    def contains(self, point: Point) -> bool:
        """Check whether a point lies on the circle (or line).

        :param point: point
        :type point: Point
        :return: membership flag
        :rtype: bool
        """
        return self.power(point) == 0


def check_distinct(*points: Point) -> None:
    """Check that points are pairwise distinct.

    :param points: points to check
    :type points: Point
    :raises DuplicatePointError: Duplicate point exception
    """
    if len(set(points)) != len(points):
        raise DuplicatePointError(f"points must be pairwise distinct: {points}.")


def cross(a: Point, b: Point, c: Point) -> Scalar:
    """Cross product ``(b - a) x (c - a)``.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :return: twice the signed area of the triangle
    :rtype: Scalar
    """
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orientation(a: Point, b: Point, c: Point) -> int:
    """Orientation of an ordered triple.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :return: +1 counterclockwise, -1 clockwise, 0 collinear
    :rtype: int
    """
    det = cross(a, b, c)
    return (det > 0) - (det < 0)


def squared_distance(a: Point, b: Point) -> Scalar:
    """Squared Euclidean distance.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :return: squared distance
    :rtype: Scalar
    """
    dx, dy = a.x - b.x, a.y - b.y
    return dx * dx + dy * dy


def squared_area(a: Point, b: Point, c: Point) -> Fraction:
    """Squared area of a triangle.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :return: squared area, zero iff the points are collinear
    :rtype: Fraction
    """
    det = cross(a, b, c)
    return Fraction(det * det) / 4


def squared_circumradius(a: Point, b: Point, c: Point) -> ExtendedSqRadius:
    """Squared circumradius of a triangle.

    Computed as ``|ab|^2 |bc|^2 |ca|^2 / (16 area^2)``.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :raises DuplicatePointError: Duplicate point exception
    :return: squared circumradius, infinite for a collinear triple
    :rtype: ExtendedSqRadius
    """
    check_distinct(a, b, c)
    det = cross(a, b, c)
    if det == 0:
        return INFINITE
    sides = squared_distance(a, b) * squared_distance(b, c) * squared_distance(c, a)
    # 16 * (det / 2)^2 == 4 * det^2
    return ExtendedSqRadius(Fraction(sides) / (4 * det * det))


def circle_through(a: Point, b: Point, c: Point) -> GeneralizedCircle:
    """Generalized circle through three points.

    Coefficients are the cofactors of the last row of the in-circle
    determinant with rows ``(x^2+y^2, x, y, 1)``.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :raises DuplicatePointError: Duplicate point exception
    :return: generalized circle through the points
    :rtype: GeneralizedCircle
    """
    check_distinct(a, b, c)
    sa = a.x * a.x + a.y * a.y
    sb = b.x * b.x + b.y * b.y
    sc = c.x * c.x + c.y * c.y
    m_xy1 = a.x * (b.y - c.y) - a.y * (b.x - c.x) + (b.x * c.y - c.x * b.y)
    m_sy1 = sa * (b.y - c.y) - a.y * (sb - sc) + (sb * c.y - sc * b.y)
    m_sx1 = sa * (b.x - c.x) - a.x * (sb - sc) + (sb * c.x - sc * b.x)
    m_sxy = (
        sa * (b.x * c.y - c.x * b.y)
        - a.x * (sb * c.y - sc * b.y)
        + a.y * (sb * c.x - sc * b.x)
    )
    return GeneralizedCircle(alpha=-m_xy1, beta=m_sy1, gamma=-m_sx1, delta=m_sxy)


def concyclic(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Check whether four points lie on a common circle or line.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :param d: fourth point
    :type d: Point
    :raises DuplicatePointError: Duplicate point exception
    :return: True iff the in-circle determinant vanishes
    :rtype: bool
    """
    check_distinct(a, b, c, d)
    return circle_through(a, b, c).contains(d)


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """Circumcenter of a non-degenerate triangle.

    Solves ``2(b - a).o = |b|^2 - |a|^2`` and ``2(c - a).o = |c|^2 - |a|^2``
    by Cramer's rule.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :param c: third point
    :type c: Point
    :raises DuplicatePointError: Duplicate point exception
    :raises NotGeneralPositionError: Not general position exception
    :return: circumcenter
    :rtype: Point
    """
    check_distinct(a, b, c)
    a11, a12 = 2 * (b.x - a.x), 2 * (b.y - a.y)
    a21, a22 = 2 * (c.x - a.x), 2 * (c.y - a.y)
    sa = a.x * a.x + a.y * a.y
    r1 = b.x * b.x + b.y * b.y - sa
    r2 = c.x * c.x + c.y * c.y - sa
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise NotGeneralPositionError("collinear points have no circumcenter.")
    return Point(
        Fraction(r1 * a22 - a12 * r2) / det,
        Fraction(a11 * r2 - r1 * a21) / det,
    )
