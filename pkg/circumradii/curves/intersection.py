"""Curve intersection counting module."""

import enum
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Sequence

import numpy as np  # type: ignore
import sympy  # type: ignore

from circumradii.curves.exceptions import ZeroPolynomialError
from circumradii.curves.polynomials import (
    BivariatePoly,
    Degree,
    UnivariatePoly,
    square_free_part,
)
from circumradii.geometry.base import rational_to_string
from circumradii.utils.logger import logger

SHEAR_RANGE = 1000  # shear numerators and denominators lie in [1, SHEAR_RANGE)


class IntersectionStatus(str, enum.Enum):
    """Outcome of an intersection count."""

    COMMON_COMPONENT = "COMMON_COMPONENT"
    FINITE = "FINITE"


class IntersectionReport(NamedTuple):
    """Intersection count of two plane curves.

    ``x_root_count`` is the number of distinct real roots of the eliminating
    resultant, zero for ``COMMON_COMPONENT``.
    """

    status: IntersectionStatus
    x_root_count: int
    bezout_bound: int
    shear_used: Fraction
    resultant_degree: Degree

    def to_dict(self) -> dict[str, Any]:
        """Serialize report.

        :return: JSON-compatible dict, rationals as ``num/den`` strings
        :rtype: dict[str, Any]
        """
        return {
            "status": self.status.value,
            "x_root_count": self.x_root_count,
            "bezout_bound": self.bezout_bound,
            "shear_used": rational_to_string(self.shear_used),
            "resultant_degree": (
                None
                if self.status is IntersectionStatus.COMMON_COMPONENT
                else int(self.resultant_degree)
            ),
        }


def share_component(p: BivariatePoly, q: BivariatePoly) -> bool:
    """Check whether two nonzero polynomials share a non-constant factor.

    :param p: first polynomial
    :type p: BivariatePoly
    :param q: second polynomial
    :type q: BivariatePoly
    :return: True if gcd(p, q) has positive total degree
    :rtype: bool
    """
    common = p.to_sympy().gcd(q.to_sympy())
    return bool(common.total_degree() > 0)


def resultant_eliminate_y(p: BivariatePoly, q: BivariatePoly) -> UnivariatePoly:
    """Resultant of p and q with respect to y.

    Both polynomials are viewed as polynomials in y with coefficients in
    Q[x]; the resultant is taken through a subresultant remainder sequence.
    It is identically zero iff p and q share a common component. Factors
    free of y drop out of the plain resultant, so they are found by a gcd
    first.

    :param p: first polynomial
    :type p: BivariatePoly
    :param q: second polynomial
    :type q: BivariatePoly
    :return: resultant as a polynomial in x
    :rtype: UnivariatePoly
    """
    if p.is_zero or q.is_zero or share_component(p, q):
        return UnivariatePoly([])
    if p.degree_y == 0 and q.degree_y == 0:
        return UnivariatePoly([1])
    if p.degree_y == 0 or q.degree_y == 0:
        # res(a, q) = a**deg_y(q) for a free of y
        constant, other = (p, q) if p.degree_y == 0 else (q, p)
        base = UnivariatePoly(
            [constant.coefficient(i, 0) for i in range(constant.coefficients.shape[0])]
        )
        return UnivariatePoly.from_sympy(base.to_sympy() ** int(other.degree_y))
    resultant = p.to_sympy(order="yx").resultant(q.to_sympy(order="yx"))
    if not isinstance(resultant, sympy.Poly):
        resultant = sympy.Poly(resultant, sympy.Symbol("x"), domain=sympy.QQ)
    if resultant.is_zero:
        return UnivariatePoly([])
    return UnivariatePoly.from_sympy(resultant)


def _sign_changes(signs: Sequence[int]) -> int:
    nonzero = [sign for sign in signs if sign != 0]
    return sum(1 for first, second in zip(nonzero, nonzero[1:]) if first != second)


def sturm_distinct_real_roots(u: UnivariatePoly) -> int:
    """Number of distinct real roots over the whole real line.

    The square-free part is taken first so repeated roots count once, then
    the Sturm chain sign variations are compared at minus and plus infinity.

    :param u: polynomial
    :type u: UnivariatePoly
    :raises ZeroPolynomialError: Zero polynomial exception
    :return: number of distinct real roots
    :rtype: int
    """
    if u.is_zero:
        raise ZeroPolynomialError("the zero polynomial has infinitely many roots.")
    if u.degree == 0:
        return 0
    chain = sympy.sturm(square_free_part(u).to_sympy())
    at_plus_inf = [int(sympy.sign(poly.LC())) for poly in chain]
    at_minus_inf = [
        sign * (-1) ** poly.degree() for sign, poly in zip(at_plus_inf, chain)
    ]
    return _sign_changes(at_minus_inf) - _sign_changes(at_plus_inf)


def draw_shear(shear_seed: Optional[int]) -> Fraction:
    """Draw the shear parameter.

    :param shear_seed: seed, None for no shear
    :type shear_seed: Optional[int]
    :return: zero without seed, else a nonzero rational
    :rtype: Fraction
    """
    if shear_seed is None:
        return Fraction(0)
    rng = np.random.default_rng(shear_seed)
    numerator, denominator = rng.integers(1, SHEAR_RANGE, size=2)
    sign = 1 if rng.random() < 0.5 else -1
    return Fraction(sign * int(numerator), int(denominator))


def count_common_points(
    p: BivariatePoly,
    q: BivariatePoly,
    shear_seed: Optional[int] = None,
) -> IntersectionReport:
    """Count the common real points of two curves by their x projections.

    A rational shear ``x <- x + t*y`` is applied first so that distinct
    intersection points generically get distinct x-coordinates. A vanishing
    resultant reports ``COMMON_COMPONENT`` with or without a shear.

    :param p: first curve
    :type p: BivariatePoly
    :param q: second curve
    :type q: BivariatePoly
    :param shear_seed: seed of the shear parameter, defaults to None (no shear)
    :type shear_seed: Optional[int]
    :raises ZeroPolynomialError: Zero polynomial exception
    :return: intersection report
    :rtype: IntersectionReport
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("curves must be defined by nonzero polynomials.")
    t = draw_shear(shear_seed=shear_seed)
    logger.debug("Shear parameter %s", t)
    bezout_bound = int(p.total_degree * q.total_degree)
    resultant = resultant_eliminate_y(p.shear(t), q.shear(t))
    if resultant.is_zero:
        logger.warning("Curves share a component, shear parameter %s", t)
        return IntersectionReport(
            status=IntersectionStatus.COMMON_COMPONENT,
            x_root_count=0,
            bezout_bound=bezout_bound,
            shear_used=t,
            resultant_degree=resultant.degree,
        )
    return IntersectionReport(
        status=IntersectionStatus.FINITE,
        x_root_count=sturm_distinct_real_roots(resultant),
        bezout_bound=bezout_bound,
        shear_used=t,
        resultant_degree=resultant.degree,
    )
