"""Base geometry module."""

import enum
import re
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterator, NamedTuple, Optional, Union

Coordinate = Union[int, Fraction]

INFINITE_TOKEN = "inf"
RATIONAL_PATTERN = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def as_rational(value: Any) -> Coordinate:
    """Convert a value to an exact rational coordinate.

    Integral values are kept as :class:`int` so that lattice computations
    stay in integer arithmetic; any other value becomes a :class:`Fraction`
    in lowest terms. Strings must be an integer or ``num/den``.

    :param value: value to convert, an int, a Fraction or a string such as "3/4"
    :type value: Any
    :raises TypeError: Type error exception
    :raises ValueError: Value error exception
    :return: exact rational value
    :rtype: Coordinate
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("value must be an exact rational (int, Fraction or str).")
    if isinstance(value, str) and RATIONAL_PATTERN.fullmatch(value) is None:
        raise ValueError(f"{value!r} is not an integer or num/den.")
    if isinstance(value, (Rational, str)):
        try:
            fraction = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"{value!r} is not a rational number.") from e
        return fraction.numerator if fraction.denominator == 1 else fraction
    raise TypeError("value must be an exact rational (int, Fraction or str).")


def rational_to_string(value: Coordinate) -> str:
    """Render a rational as ``num/den``.

    :param value: rational value
    :type value: Coordinate
    :return: string representation
    :rtype: str
    """
    fraction = Fraction(value)
    return f"{fraction.numerator}/{fraction.denominator}"


class PositionMode(str, enum.Enum):
    """General position convention.

    ``PAPER`` forbids four points on a common line or circle. ``STRICT``
    additionally forbids three collinear points.
    """

    STRICT = "strict"
    PAPER = "paper"


class Point:
    """Point in the plane with exact rational coordinates.

    :param x: x coordinate
    :type x: Union[int, Fraction, str]
    :param y: y coordinate
    :type y: Union[int, Fraction, str]
    """

    __slots__ = ("_x", "_y")

    def __init__(  # noqa: D107
        self,
        x: Union[Coordinate, str],
        y: Union[Coordinate, str],
    ) -> None:
        self._x = as_rational(x)
        self._y = as_rational(y)

    @property
    def x(self) -> Coordinate:
        """X coordinate property.

        :return: x coordinate
        :rtype: Coordinate
        """
        return self._x

    @property
    def y(self) -> Coordinate:
        """Y coordinate property.

        :return: y coordinate
        :rtype: Coordinate
        """
        return self._y

    def translate(self, dx: Coordinate, dy: Coordinate) -> "Point":
        """Translate point.

        :param dx: x offset
        :type dx: Coordinate
        :param dy: y offset
        :type dy: Coordinate
        :return: translated point
        :rtype: Point
        """
        return Point(self._x + dx, self._y + dy)

    def scale(self, factor: Coordinate) -> "Point":
        """Scale point about the origin.

        :param factor: scale factor
        :type factor: Coordinate
        :return: scaled point
        :rtype: Point
        """
        return Point(self._x * factor, self._y * factor)

    def to_string(self) -> str:
        """Serialize point as ``xnum/xden ynum/yden``.

        :return: serialized point
        :rtype: str
        """
        return f"{rational_to_string(self._x)} {rational_to_string(self._y)}"

    @classmethod
    def from_string(cls, value: str) -> "Point":
        """Parse a point serialized by :func:`to_string`.

        :param value: serialized point
        :type value: str
        :raises ValueError: Value error exception
        :return: parsed point
        :rtype: Point
        """
        fields = value.split()
        if len(fields) != 2:
            raise ValueError(f"expected two coordinates, got {value!r}.")
        try:
            return cls(fields[0], fields[1])
        except (TypeError, ValueError) as e:
            raise ValueError(f"invalid point {value!r}.") from e

    def __iter__(self) -> Iterator[Coordinate]:
        """Iterate over coordinates.

        :return: coordinates iterator
        :rtype: Iterator[Coordinate]
        """
        return iter((self._x, self._y))

    def __eq__(self, other: object) -> bool:
        """Equality method.

        :param other: other object
        :type other: object
        :return: equality flag
        :rtype: bool
        """
        if not isinstance(other, Point):
            return NotImplemented
        return self._x == other._x and self._y == other._y

    def __hash__(self) -> int:
        """Hash method.

        :return: hash value
        :rtype: int
        """
        return hash((self._x, self._y))

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return f"{self.__class__.__name__}(x={self._x}, y={self._y})"


class ExtendedSqRadius(NamedTuple):
    """Exact squared circumradius.

    ``value`` holds the squared radius as a :class:`Fraction`, or ``None``
    for a collinear triple (a line taken as a circle of infinite radius).
    Two infinite radii compare equal.
    """

    value: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        """Infinite flag property.

        :return: True for collinear triples
        :rtype: bool
        """
        return self.value is None

    def to_string(self) -> str:
        """Serialize squared radius.

        :return: ``num/den`` or ``inf``
        :rtype: str
        """
        return INFINITE_TOKEN if self.value is None else rational_to_string(self.value)

    @classmethod
    def from_string(cls, value: str) -> "ExtendedSqRadius":
        """Parse a squared radius serialized by :func:`to_string`.

        :param value: serialized squared radius
        :type value: str
        :return: squared radius
        :rtype: ExtendedSqRadius
        """
        if value == INFINITE_TOKEN:
            return INFINITE
        return cls(Fraction(as_rational(value)))

    @classmethod
    def finite(cls, value: Union[Coordinate, Fraction]) -> "ExtendedSqRadius":
        """Build a finite squared radius.

        :param value: squared radius
        :type value: Union[Coordinate, Fraction]
        :return: finite squared radius
        :rtype: ExtendedSqRadius
        """
        return cls(Fraction(value))


INFINITE = ExtendedSqRadius(None)
