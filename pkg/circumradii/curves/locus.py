"""Radius locus curves module."""

from typing import Any

from circumradii.curves.exceptions import (
    DegeneratePairError,
    NonpositiveRadiusError,
    SamePairError,
)
from circumradii.curves.polynomials import BivariatePoly, to_fraction
from circumradii.geometry.base import Point
from circumradii.geometry.predicates import squared_distance


def squared_distance_poly(a: Point) -> BivariatePoly:
    """Squared distance from a fixed point to X = (x, y).

    :param a: fixed point
    :type a: Point
    :return: ``(x - a.x)**2 + (y - a.y)**2``
    :rtype: BivariatePoly
    """
    return (BivariatePoly.x() - a.x) ** 2 + (BivariatePoly.y() - a.y) ** 2


def signed_area_poly(a: Point, b: Point) -> BivariatePoly:
    """Signed area of the triangle (a, b, X) as a linear polynomial in X.

    :param a: first point
    :type a: Point
    :param b: second point
    :type b: Point
    :return: signed area, positive when (a, b, X) turns counter-clockwise
    :rtype: BivariatePoly
    """
    half = to_fraction("1/2")
    cross = (BivariatePoly.y() - a.y) * (b.x - a.x) - (BivariatePoly.x() - a.x) * (
        b.y - a.y
    )
    return cross * half


def radius_locus(a: Point, b: Point, c: Point, d: Point) -> BivariatePoly:
    """Locus of points X with equal circumradii R(ABX) = R(CDX).

    The curve is the zero set of
    ``|AX|^2 |BX|^2 |AB|^2 |CDX|^2 - |CX|^2 |DX|^2 |CD|^2 |ABX|^2``
    where ``|PQX|`` is the area of the triangle PQX. Its total degree is at
    most 6. Where both triangles are non-degenerate the polynomial vanishes
    exactly when the two squared circumradii agree.

    :param a: first point of the first pair
    :type a: Point
    :param b: second point of the first pair
    :type b: Point
    :param c: first point of the second pair
    :type c: Point
    :param d: second point of the second pair
    :type d: Point
    :raises DegeneratePairError: Degenerate pair exception
    :raises SamePairError: Same pair exception
    :return: locus polynomial
    :rtype: BivariatePoly
    """
    if a == b or c == d:
        raise DegeneratePairError("each pair must consist of two distinct points.")
    if {a, b} == {c, d}:
        raise SamePairError("the two pairs must differ.")
    lhs = (
        squared_distance_poly(a)
        * squared_distance_poly(b)
        * squared_distance(a, b)
        * signed_area_poly(c, d) ** 2
    )
    rhs = (
        squared_distance_poly(c)
        * squared_distance_poly(d)
        * squared_distance(c, d)
        * signed_area_poly(a, b) ** 2
    )
    return lhs - rhs


def circle_poly(center: Point, r2: Any) -> BivariatePoly:
    """Circle ``(x - cx)**2 + (y - cy)**2 - r2``.

    :param center: circle center
    :type center: Point
    :param r2: squared radius
    :type r2: Any
    :raises NonpositiveRadiusError: Nonpositive radius exception
    :return: circle polynomial
    :rtype: BivariatePoly
    """
    r2 = to_fraction(r2)
    if r2 <= 0:
        raise NonpositiveRadiusError(f"squared radius must be positive, got {r2}.")
    return squared_distance_poly(center) - r2
