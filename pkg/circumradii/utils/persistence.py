"""Persistence module."""

import json
from typing import Any, Iterable, Optional, Sequence

from circumradii.geometry.base import Point
from circumradii.utils.exceptions import PointSetFormatError
from circumradii.utils.logger import logger

POINT_SET_HEADER = "pointset 1"
COMMENT_TOKEN = "#"


def _strip_comment(line: str) -> str:
    return line.split(COMMENT_TOKEN, 1)[0].strip()


def parse_point_set(text: str) -> list[Point]:
    """Parse the text of a point-set file.

    :param text: file contents
    :type text: str
    :raises PointSetFormatError: Point set format exception
    :return: points in file order
    :rtype: list[Point]
    """
    lines = [_strip_comment(line) for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or lines[0] != POINT_SET_HEADER:
        raise PointSetFormatError(f"first line must be {POINT_SET_HEADER!r}.")
    points: list[Point] = []
    seen: dict[Point, int] = {}
    for number, line in enumerate(lines[1:], start=1):
        try:
            point = Point.from_string(line)
        except ValueError as e:
            raise PointSetFormatError(f"point {number}: {e}") from e
        if point in seen:
            raise PointSetFormatError(
                f"point {number} duplicates point {seen[point]} at {point}."
            )
        seen[point] = number
        points.append(point)
    return points


def load_point_set(filename: str) -> list[Point]:
    """Load a point set from file.

    :param filename: Filename
    :type filename: str
    :raises PointSetFormatError: Point set format exception
    :return: points in file order
    :rtype: list[Point]
    """
    try:
        with open(filename, "r", encoding="utf-8") as file:
            return parse_point_set(text=file.read())
    except (IOError, PointSetFormatError) as e:
        logger.error("Error occurred while loading point set: %s", e)
        raise e


def save_point_set(
    points: Sequence[Point],
    filename: str,
    comment: Optional[str] = None,
) -> None:
    """Save a point set to file.

    :param points: points
    :type points: Sequence[Point]
    :param filename: Filename
    :type filename: str
    :param comment: comment written after the header, defaults to None
    :type comment: Optional[str]
    """
    lines = [POINT_SET_HEADER]
    if comment is not None:
        lines.extend(f"{COMMENT_TOKEN} {line}" for line in comment.splitlines())
    lines.extend(point.to_string() for point in points)
    try:
        with open(filename, "w", encoding="utf-8") as file:
            file.write("\n".join(lines) + "\n")
    except IOError as e:
        logger.error("Error occurred while saving point set: %s", e)
        raise e


def dump_record(record: dict[str, Any]) -> str:
    """Canonical one-line JSON serialization.

    :param record: JSON-compatible record
    :type record: dict[str, Any]
    :return: JSON line without trailing newline
    :rtype: str
    """
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def write_records(
    records: Iterable[dict[str, Any]],
    filename: str,
    append: bool = False,
) -> None:
    """Write records as JSON lines.

    :param records: JSON-compatible records
    :type records: Iterable[dict[str, Any]]
    :param filename: Filename
    :type filename: str
    :param append: append instead of overwrite, defaults to False
    :type append: bool
    """
    try:
        with open(filename, "a" if append else "w", encoding="utf-8") as file:
            for record in records:
                file.write(dump_record(record) + "\n")
    except (IOError, TypeError) as e:
        logger.error("Error occurred while writing records: %s", e)
        raise e


def read_records(filename: str) -> list[dict[str, Any]]:
    """Read records written by :func:`write_records`.

    :param filename: Filename
    :type filename: str
    :return: records in file order
    :rtype: list[dict[str, Any]]
    """
    try:
        with open(filename, "r", encoding="utf-8") as file:
            return [json.loads(line) for line in file if line.strip()]
    except (IOError, json.JSONDecodeError) as e:
        logger.error("Error occurred while reading records: %s", e)
        raise e
