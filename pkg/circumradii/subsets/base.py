"""Base radius subsets module."""

import enum
import hashlib
import itertools
import json
from collections import defaultdict
from typing import Any, Iterator, NamedTuple, Sequence, Tuple

from circumradii.geometry.base import ExtendedSqRadius, Point
from circumradii.geometry.position import check_points
from circumradii.geometry.predicates import squared_circumradius
from circumradii.subsets.exceptions import InvalidCertificateError

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]


class ExclusionCase(str, enum.Enum):
    """Reason an excluded point cannot join a distinct-radii subset.

    ``CASE_CIRCLE``: the point lies on a circle through two chosen points
    whose radius repeats the radius of a chosen triple.
    ``CASE_LOCUS``: the point lies on the locus curve of two distinct chosen
    pairs, i.e. it forms equal radii with both.
    """

    CASE_CIRCLE = "CASE_CIRCLE"
    CASE_LOCUS = "CASE_LOCUS"


class ExclusionRecord(NamedTuple):
    """Evidence that a point cannot be added to a subset.

    ``match`` is a chosen triple for ``CASE_CIRCLE`` and a second chosen pair
    for ``CASE_LOCUS``.
    """

    case: ExclusionCase
    x_index: int
    pair: Pair
    match: Tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        """Serialize record.

        :return: JSON-compatible dict
        :rtype: dict[str, Any]
        """
        return {
            "case": self.case.value,
            "x_index": self.x_index,
            "pair": list(self.pair),
            "match": list(self.match),
        }

    @classmethod
    def from_dict(cls, value: dict[str, Any]) -> "ExclusionRecord":
        """Deserialize record.

        :param value: dict produced by :func:`to_dict`
        :type value: dict[str, Any]
        :return: exclusion record
        :rtype: ExclusionRecord
        """
        return cls(
            case=ExclusionCase(value["case"]),
            x_index=int(value["x_index"]),
            pair=tuple(value["pair"]),  # type: ignore
            match=tuple(value["match"]),
        )


class SubsetCertificate(NamedTuple):
    """Subset of point indices together with the evidence for its claims."""

    chosen: Tuple[int, ...]
    distinct_ok: bool
    maximal: bool
    optimal: bool
    exclusions: dict[int, ExclusionRecord]

    @property
    def size(self) -> int:
        """Subset size property.

        :return: number of chosen points
        :rtype: int
        """
        return len(self.chosen)

    def to_dict(self) -> dict[str, Any]:
        """Serialize certificate.

        :return: JSON-compatible dict
        :rtype: dict[str, Any]
        """
        return {
            "chosen": list(self.chosen),
            "distinct_ok": self.distinct_ok,
            "maximal": self.maximal,
            "optimal": self.optimal,
            "exclusions": [
                self.exclusions[idx].to_dict() for idx in sorted(self.exclusions)
            ],
        }

    @classmethod
    def from_dict(cls, value: dict[str, Any]) -> "SubsetCertificate":
        """Deserialize certificate.

        :param value: dict produced by :func:`to_dict`
        :type value: dict[str, Any]
        :raises InvalidCertificateError: Invalid certificate exception
        :return: subset certificate
        :rtype: SubsetCertificate
        """
        try:
            records = [ExclusionRecord.from_dict(item) for item in value["exclusions"]]
            return cls(
                chosen=tuple(int(idx) for idx in value["chosen"]),
                distinct_ok=bool(value["distinct_ok"]),
                maximal=bool(value["maximal"]),
                optimal=bool(value["optimal"]),
                exclusions={record.x_index: record for record in records},
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidCertificateError(f"malformed certificate: {e}") from e

    def digest(self) -> str:
        """SHA-256 digest of the canonical serialization.

        :return: hex digest
        :rtype: str
        """
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class TripleRadiusTable:
    """Squared circumradius of every unordered index triple.

    :param points: pairwise distinct points
    :type points: Sequence[Point]
    """

    def __init__(  # noqa: D107
        self,
        points: Sequence[Point],
    ) -> None:
        check_points(points)
        self._points = tuple(points)
        self._radii: dict[Triple, ExtendedSqRadius] = {
            (i, j, k): squared_circumradius(points[i], points[j], points[k])
            for i, j, k in itertools.combinations(range(len(points)), 3)
        }

    @property
    def points(self) -> Tuple[Point, ...]:
        """Points property.

        :return: points the table was built from
        :rtype: Tuple[Point, ...]
        """
        return self._points

    @property
    def num_points(self) -> int:
        """Number of points property.

        :return: number of points
        :rtype: int
        """
        return len(self._points)

    def __getitem__(self, triple: Sequence[int]) -> ExtendedSqRadius:
        """Squared radius of a triple given in any order.

        :param triple: three distinct indices
        :type triple: Sequence[int]
        :return: squared circumradius
        :rtype: ExtendedSqRadius
        """
        return self._radii[tuple(sorted(triple))]  # type: ignore

    def __len__(self) -> int:
        """Number of triples.

        :return: number of triples
        :rtype: int
        """
        return len(self._radii)

    def __iter__(self) -> Iterator[Triple]:
        """Iterate over triples in lexicographic order.

        :return: triples iterator
        :rtype: Iterator[Triple]
        """
        return iter(self._radii)

    def items(self) -> Iterator[Tuple[Triple, ExtendedSqRadius]]:
        """Iterate over (triple, squared radius) pairs.

        :return: items iterator
        :rtype: Iterator[Tuple[Triple, ExtendedSqRadius]]
        """
        return iter(self._radii.items())

    def groups(self) -> dict[ExtendedSqRadius, list[Triple]]:
        """Triples grouped by equal squared radius.

        :return: mapping from squared radius to the triples attaining it
        :rtype: dict[ExtendedSqRadius, list[Triple]]
        """
        groups: dict[ExtendedSqRadius, list[Triple]] = defaultdict(list)
        for triple, radius in self._radii.items():
            groups[radius].append(triple)
        return dict(groups)

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return f"{self.__class__.__name__}(num_points={self.num_points})"


def triple_radius_table(points: Sequence[Point]) -> TripleRadiusTable:
    """Build the squared circumradius table of a point list.

    :param points: pairwise distinct points
    :type points: Sequence[Point]
    :raises DuplicatePointError: Duplicate point exception
    :return: triple radius table
    :rtype: TripleRadiusTable
    """
    return TripleRadiusTable(points=points)


def radius_conflicts(table: TripleRadiusTable) -> list[Tuple[Triple, Triple]]:
    """Pairs of distinct triples with equal squared radius.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :return: conflicting triple pairs in lexicographic order
    :rtype: list[Tuple[Triple, Triple]]
    """
    conflicts = [
        pair
        for triples in table.groups().values()
        for pair in itertools.combinations(triples, 2)
    ]
    return sorted(conflicts)


def is_distinct_subset(table: TripleRadiusTable, chosen: Sequence[int]) -> bool:
    """Check that all triples of a subset have pairwise distinct radii.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :param chosen: subset indices
    :type chosen: Sequence[int]
    :return: distinctness flag
    :rtype: bool
    """
    seen: set[ExtendedSqRadius] = set()
    for triple in itertools.combinations(sorted(chosen), 3):
        radius = table[triple]
        if radius in seen:
            return False
        seen.add(radius)
    return True
