"""Exact polynomials module."""

from fractions import Fraction
from typing import Any, Iterator, Literal, Mapping, Sequence, Tuple, Union

import numpy as np  # type: ignore
import sympy  # type: ignore
from scipy.special import comb  # type: ignore

from circumradii.geometry.base import Point, as_rational

Degree = Union[int, float]
Monomial = Tuple[int, int]
Order = Literal["xy", "yx"]

NEG_INF = float("-inf")
X, Y = sympy.symbols("x y")


def to_fraction(value: Any) -> Fraction:
    """Convert an exact rational (int, Fraction, str or sympy number).

    :param value: value to convert
    :type value: Any
    :raises TypeError: Type error exception
    :raises ValueError: Value error exception
    :return: fraction
    :rtype: Fraction
    """
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ValueError(f"{value} is not a rational number.")
        return Fraction(int(value.p), int(value.q))
    return Fraction(as_rational(value))


def to_sympy_rational(value: Fraction) -> sympy.Rational:
    """Convert a fraction to a sympy rational.

    :param value: fraction
    :type value: Fraction
    :return: sympy rational
    :rtype: sympy.Rational
    """
    return sympy.Rational(value.numerator, value.denominator)


class BivariatePoly:
    """Polynomial in x, y with exact rational coefficients.

    Coefficients live in a dense object grid where entry ``[i, j]`` is the
    coefficient of ``x**i * y**j``. The grid is kept canonical: trailing
    all-zero rows and columns are trimmed, so equal polynomials have equal
    grids and the zero polynomial has an empty grid.

    :param coefficients: coefficient grid indexed by (x power, y power)
    :type coefficients: Union[np.ndarray, Sequence[Sequence[Any]]]
    """

    def __init__(  # noqa: D107
        self,
        coefficients: Union[np.ndarray, Sequence[Sequence[Any]]],
    ) -> None:
        grid = np.array(coefficients, dtype=object)
        if grid.size == 0:
            grid = np.empty((0, 0), dtype=object)
        if grid.ndim != 2:
            raise ValueError("coefficients must be a 2-D grid.")
        self._grid = self._canonical(grid)

    @staticmethod
    def _canonical(grid: np.ndarray) -> np.ndarray:
        if grid.size == 0:
            return np.empty((0, 0), dtype=object)
        grid = np.vectorize(to_fraction, otypes=[object])(grid)
        nonzero = np.argwhere(grid != 0)
        if nonzero.size == 0:
            return np.empty((0, 0), dtype=object)
        rows, cols = nonzero.max(axis=0) + 1
        return grid[:rows, :cols].copy()

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Any]) -> "BivariatePoly":
        """Build a polynomial from a monomial mapping.

        :param terms: mapping from (x power, y power) to coefficient
        :type terms: Mapping[Monomial, Any]
        :raises ValueError: Value error exception
        :return: polynomial
        :rtype: BivariatePoly
        """
        if not terms:
            return cls.zero()
        if any(i < 0 or j < 0 for i, j in terms):
            raise ValueError("monomial powers must be non-negative.")
        rows = max(i for i, _ in terms) + 1
        cols = max(j for _, j in terms) + 1
        grid = np.zeros((rows, cols), dtype=object)
        for (i, j), value in terms.items():
            grid[i, j] += to_fraction(value)
        return cls(grid)

    @classmethod
    def zero(cls) -> "BivariatePoly":
        """Zero polynomial.

        :return: zero polynomial
        :rtype: BivariatePoly
        """
        return cls(np.empty((0, 0), dtype=object))

    @classmethod
    def constant(cls, value: Any) -> "BivariatePoly":
        """Constant polynomial.

        :param value: constant
        :type value: Any
        :return: constant polynomial
        :rtype: BivariatePoly
        """
        return cls([[value]])

    @classmethod
    def x(cls) -> "BivariatePoly":
        """Polynomial ``x``.

        :return: x
        :rtype: BivariatePoly
        """
        return cls.from_terms({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        """Polynomial ``y``.

        :return: y
        :rtype: BivariatePoly
        """
        return cls.from_terms({(0, 1): 1})

    @property
    def coefficients(self) -> np.ndarray:
        """Coefficient grid property.

        :return: copy of the canonical coefficient grid
        :rtype: np.ndarray
        """
        return self._grid.copy()

    @property
    def is_zero(self) -> bool:
        """Zero flag property.

        :return: True for the zero polynomial
        :rtype: bool
        """
        return self._grid.size == 0

    @property
    def total_degree(self) -> Degree:
        """Total degree property.

        :return: total degree, ``-inf`` for the zero polynomial
        :rtype: Degree
        """
        if self.is_zero:
            return NEG_INF
        return int(max(i + j for i, j in self.terms()))

    @property
    def degree_y(self) -> Degree:
        """Degree in y property.

        :return: degree in y, ``-inf`` for the zero polynomial
        :rtype: Degree
        """
        return NEG_INF if self.is_zero else self._grid.shape[1] - 1

    def coefficient(self, i: int, j: int) -> Fraction:
        """Coefficient of ``x**i * y**j``.

        :param i: x power
        :type i: int
        :param j: y power
        :type j: int
        :return: coefficient
        :rtype: Fraction
        """
        rows, cols = self._grid.shape
        if 0 <= i < rows and 0 <= j < cols:
            return self._grid[i, j]
        return Fraction(0)

    def terms(self) -> dict[Monomial, Fraction]:
        """Nonzero terms.

        :return: mapping from (x power, y power) to nonzero coefficient
        :rtype: dict[Monomial, Fraction]
        """
        return {
            (int(i), int(j)): self._grid[i, j] for i, j in np.argwhere(self._grid != 0)
        }

    def evaluate(self, point: Point) -> Fraction:
        """Exact value at a rational point.

        :param point: point
        :type point: Point
        :return: value
        :rtype: Fraction
        """
        value = Fraction(0)
        for (i, j), coefficient in self.terms().items():
            value += coefficient * point.x**i * point.y**j
        return value

    def shear(self, t: Any) -> "BivariatePoly":
        """Substitute ``x + t*y`` for ``x``.

        :param t: shear parameter
        :type t: Any
        :return: sheared polynomial
        :rtype: BivariatePoly
        """
        t = to_fraction(t)
        if t == 0:
            return self
        terms: dict[Monomial, Fraction] = {}
        for (i, j), coefficient in self.terms().items():
            for k in range(i + 1):
                key = (k, i - k + j)
                terms[key] = terms.get(key, Fraction(0)) + (
                    coefficient * comb(i, k, exact=True) * t ** (i - k)
                )
        return BivariatePoly.from_terms(terms)

    def to_sympy(self, order: Order = "xy") -> sympy.Poly:
        """Convert to a sympy polynomial over QQ.

        :param order: generator order, ``"yx"`` makes y the main variable
        :type order: Order
        :raises ValueError: Value error exception
        :return: sympy polynomial
        :rtype: sympy.Poly
        """
        if order not in ("xy", "yx"):
            raise ValueError("order must be 'xy' or 'yx'.")
        gens = (X, Y) if order == "xy" else (Y, X)
        if self.is_zero:
            return sympy.Poly(0, *gens, domain=sympy.QQ)
        terms = {
            ((i, j) if order == "xy" else (j, i)): to_sympy_rational(coefficient)
            for (i, j), coefficient in self.terms().items()
        }
        return sympy.Poly.from_dict(terms, *gens, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "BivariatePoly":
        """Build from a sympy polynomial in the generators x and y.

        :param poly: sympy polynomial with generators ``(x, y)`` or ``(y, x)``
        :type poly: sympy.Poly
        :raises ValueError: Value error exception
        :return: polynomial
        :rtype: BivariatePoly
        """
        gens = tuple(poly.gens)
        if gens not in ((X, Y), (Y, X)):
            raise ValueError(f"unsupported generators {gens}.")
        terms = {
            (monomial if gens == (X, Y) else monomial[::-1]): to_fraction(coefficient)
            for monomial, coefficient in poly.terms()
        }
        return cls.from_terms(terms)

    def _pad(self, shape: Tuple[int, int]) -> np.ndarray:
        grid = np.zeros(shape, dtype=object)
        rows, cols = self._grid.shape
        grid[:rows, :cols] = self._grid
        return grid

    def __add__(self, other: Any) -> "BivariatePoly":
        """Add method.

        :param other: polynomial or rational constant
        :type other: Any
        :return: sum
        :rtype: BivariatePoly
        """
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        shape = (
            max(self._grid.shape[0], other._grid.shape[0]),
            max(self._grid.shape[1], other._grid.shape[1]),
        )
        return BivariatePoly(self._pad(shape) + other._pad(shape))

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        """Negation method.

        :return: negated polynomial
        :rtype: BivariatePoly
        """
        return BivariatePoly(-self._grid)

    def __sub__(self, other: Any) -> "BivariatePoly":
        """Subtract method.

        :param other: polynomial or rational constant
        :type other: Any
        :return: difference
        :rtype: BivariatePoly
        """
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Any) -> "BivariatePoly":
        """Reflected subtract method.

        :param other: rational constant
        :type other: Any
        :return: difference
        :rtype: BivariatePoly
        """
        return BivariatePoly.constant(other) - self

    def __mul__(self, other: Any) -> "BivariatePoly":
        """Multiply method.

        :param other: polynomial or rational scalar
        :type other: Any
        :return: product
        :rtype: BivariatePoly
        """
        if not isinstance(other, BivariatePoly):
            return BivariatePoly(self._grid * to_fraction(other))
        if self.is_zero or other.is_zero:
            return BivariatePoly.zero()
        rows, cols = other._grid.shape
        grid = np.zeros(
            (self._grid.shape[0] + rows - 1, self._grid.shape[1] + cols - 1),
            dtype=object,
        )
        for (i, j), coefficient in self.terms().items():
            grid[i : i + rows, j : j + cols] += coefficient * other._grid
        return BivariatePoly(grid)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePoly":
        """Power method.

        :param exponent: non-negative integer exponent
        :type exponent: int
        :raises ValueError: Value error exception
        :return: power
        :rtype: BivariatePoly
        """
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer.")
        result = BivariatePoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        """Equality method.

        :param other: other object
        :type other: object
        :return: equality flag
        :rtype: bool
        """
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._grid.shape == other._grid.shape and bool(
            np.all(self._grid == other._grid)
        )

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        if self.is_zero:
            return f"{self.__class__.__name__}(0)"
        return f"{self.__class__.__name__}({self.to_sympy().as_expr()})"


class UnivariatePoly:
    """Polynomial in x with exact rational coefficients, lowest degree first.

    Trailing zero coefficients are trimmed, so the leading coefficient is
    nonzero unless the polynomial is zero (empty coefficient tuple).

    :param coefficients: coefficients, lowest degree first
    :type coefficients: Sequence[Any]
    """

    def __init__(  # noqa: D107
        self,
        coefficients: Sequence[Any],
    ) -> None:
        values = [to_fraction(value) for value in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients = tuple(values)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients property.

        :return: coefficients, lowest degree first
        :rtype: Tuple[Fraction, ...]
        """
        return self._coefficients

    @property
    def is_zero(self) -> bool:
        """Zero flag property.

        :return: True for the zero polynomial
        :rtype: bool
        """
        return not self._coefficients

    @property
    def degree(self) -> Degree:
        """Degree property.

        :return: degree, ``-inf`` for the zero polynomial
        :rtype: Degree
        """
        return NEG_INF if self.is_zero else len(self._coefficients) - 1

    def evaluate(self, value: Any) -> Fraction:
        """Exact value by Horner's rule.

        :param value: rational argument
        :type value: Any
        :return: value
        :rtype: Fraction
        """
        x = to_fraction(value)
        result = Fraction(0)
        for coefficient in reversed(self._coefficients):
            result = result * x + coefficient
        return result

    def to_sympy(self) -> sympy.Poly:
        """Convert to a sympy polynomial in x over QQ.

        :return: sympy polynomial
        :rtype: sympy.Poly
        """
        return sympy.Poly(
            [to_sympy_rational(value) for value in reversed(self._coefficients)] or [0],
            X,
            domain=sympy.QQ,
        )

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "UnivariatePoly":
        """Build from a univariate sympy polynomial.

        :param poly: sympy polynomial in one generator
        :type poly: sympy.Poly
        :raises ValueError: Value error exception
        :return: polynomial
        :rtype: UnivariatePoly
        """
        if len(poly.gens) != 1:
            raise ValueError("polynomial must be univariate.")
        return cls(list(reversed(poly.all_coeffs())))

    def __iter__(self) -> Iterator[Fraction]:
        """Iterate over coefficients, lowest degree first.

        :return: coefficients iterator
        :rtype: Iterator[Fraction]
        """
        return iter(self._coefficients)

    def __eq__(self, other: object) -> bool:
        """Equality method.

        :param other: other object
        :type other: object
        :return: equality flag
        :rtype: bool
        """
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        """Hash method.

        :return: hash value
        :rtype: int
        """
        return hash(self._coefficients)

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return f"{self.__class__.__name__}({list(self._coefficients)})"


def evaluate(p: BivariatePoly, pt: Point) -> Fraction:
    """Exact value of a polynomial at a point.

    :param p: polynomial
    :type p: BivariatePoly
    :param pt: point
    :type pt: Point
    :return: value
    :rtype: Fraction
    """
    return p.evaluate(point=pt)


def total_degree(p: BivariatePoly) -> Degree:
    """Canonical total degree of a polynomial.

    :param p: polynomial
    :type p: BivariatePoly
    :return: total degree, ``-inf`` for the zero polynomial
    :rtype: Degree
    """
    return p.total_degree


def square_free_part(u: UnivariatePoly) -> UnivariatePoly:
    """Monic square-free part, each distinct root kept once.

    :param u: polynomial
    :type u: UnivariatePoly
    :return: square-free part (zero for the zero polynomial)
    :rtype: UnivariatePoly
    """
    if u.is_zero or u.degree == 0:
        return u if u.is_zero else UnivariatePoly([1])
    return UnivariatePoly.from_sympy(u.to_sympy().sqf_part())
