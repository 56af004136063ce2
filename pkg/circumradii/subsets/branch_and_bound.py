"""Maximum distinct-radii subset module."""

import itertools
from typing import Optional, Sequence, Tuple

from circumradii.geometry.base import Point
from circumradii.subsets.base import (
    SubsetCertificate,
    TripleRadiusTable,
    radius_conflicts,
)
from circumradii.subsets.greedy import (
    build_certificate,
    check_general_position,
    greedy_scan,
)
from circumradii.utils.logger import logger

UNDECIDED, CHOSEN, EXCLUDED = 0, 1, 2


class BranchAndBound:
    """Branch-and-bound search for a maximum distinct-radii subset.

    Points are decided in index order, including before excluding, so the
    first optimum reached is the lexicographically smallest one. A conflict
    is the union of two triples with equal radius; a subset is valid iff it
    contains no conflict entirely.

    :param table: triple radius table
    :type table: TripleRadiusTable
    :param incumbent: known valid subset used as initial lower bound
    :type incumbent: Sequence[int]
    """

    def __init__(  # noqa: D107
        self,
        table: TripleRadiusTable,
        incumbent: Sequence[int],
    ) -> None:
        self.num_points = table.num_points
        self.conflicts: list[Tuple[int, ...]] = sorted(
            {
                tuple(sorted(set(first) | set(second)))
                for first, second in radius_conflicts(table=table)
            }
        )
        self.point_conflicts: list[list[int]] = [[] for _ in range(self.num_points)]
        for idx, conflict in enumerate(self.conflicts):
            for point in conflict:
                self.point_conflicts[point].append(idx)
        self.missing = [len(conflict) for conflict in self.conflicts]
        self.blocked = [0] * self.num_points
        self.state = [UNDECIDED] * self.num_points
        self.chosen: list[int] = []
        self.best: Tuple[int, ...] = tuple(sorted(incumbent))
        # True once the search itself reached a leaf of the best size; later
        # leaves of that size are lexicographically larger.
        self.best_from_search = False
        self.num_nodes = 0

    def _include(self, point: int) -> None:
        self.state[point] = CHOSEN
        self.chosen.append(point)
        for idx in self.point_conflicts[point]:
            self.missing[idx] -= 1
            if self.missing[idx] == 1:
                self.blocked[self._last_missing(idx)] += 1

    def _undo_include(self, point: int) -> None:
        for idx in self.point_conflicts[point]:
            if self.missing[idx] == 1:
                self.blocked[self._last_missing(idx)] -= 1
            self.missing[idx] += 1
        self.chosen.pop()
        self.state[point] = UNDECIDED

    def _last_missing(self, idx: int) -> int:
        return next(p for p in self.conflicts[idx] if self.state[p] != CHOSEN)

    def _upper_bound(self, start: int) -> int:
        free = [
            point
            for point in range(start, self.num_points)
            if self.state[point] == UNDECIDED and not self.blocked[point]
        ]
        free_set = set(free)
        remaining = []
        for conflict in self.conflicts:
            rest = [p for p in conflict if self.state[p] != CHOSEN]
            if rest and all(p in free_set for p in rest):
                remaining.append(rest)
        # disjoint conflicts each force a distinct removal
        used: set[int] = set()
        packing = 0
        for rest in sorted(remaining, key=len):
            if used.isdisjoint(rest):
                used.update(rest)
                packing += 1
        return len(self.chosen) + len(free) - packing

    def _can_improve(self, bound: int) -> bool:
        size = len(self.best)
        if bound != size:
            return bound > size
        if self.best_from_search:
            return False
        prefix = tuple(self.chosen)
        return prefix <= self.best[: len(prefix)]

    def _record_leaf(self) -> None:
        candidate = tuple(self.chosen)
        if len(candidate) > len(self.best) or (
            len(candidate) == len(self.best)
            and (not self.best_from_search and candidate <= self.best)
        ):
            self.best = candidate
            self.best_from_search = True

    def _search(self, point: int) -> None:
        self.num_nodes += 1
        if point == self.num_points:
            self._record_leaf()
            return
        if not self._can_improve(self._upper_bound(start=point)):
            return
        if not self.blocked[point]:
            self._include(point)
            self._search(point + 1)
            self._undo_include(point)
        self.state[point] = EXCLUDED
        self._search(point + 1)
        self.state[point] = UNDECIDED

    def search(self) -> Tuple[int, ...]:
        """Run the search.

        :return: lexicographically smallest maximum subset
        :rtype: Tuple[int, ...]
        """
        self._search(point=0)
        logger.debug(
            "Branch and bound explored %s nodes over %s conflicts",
            self.num_nodes,
            len(self.conflicts),
        )
        return self.best


def max_distinct_subset(
    points: Sequence[Point],
    table: Optional[TripleRadiusTable] = None,
) -> SubsetCertificate:
    """Maximum distinct-radii subset.

    Among all maximum subsets the lexicographically smallest index list is
    returned. The greedy subset in input order seeds the incumbent.

    :param points: points in general position
    :type points: Sequence[Point]
    :param table: precomputed triple radius table, defaults to None
    :type table: Optional[TripleRadiusTable]
    :raises NotGeneralPositionError: Not general position exception
    :return: optimal subset certificate
    :rtype: SubsetCertificate
    """
    check_general_position(points=points)
    table = table if table is not None else TripleRadiusTable(points=points)
    incumbent = greedy_scan(table=table, order=range(len(points)))
    chosen = BranchAndBound(table=table, incumbent=incumbent).search()
    return build_certificate(table=table, chosen=chosen, optimal=True)


def exhaustive_max_subset(
    points: Sequence[Point],
    table: Optional[TripleRadiusTable] = None,
) -> SubsetCertificate:
    """Maximum distinct-radii subset by exhaustive enumeration.

    Subsets are enumerated by decreasing size and, within a size, in
    lexicographic order, so the first valid one is the lexicographically
    smallest maximum subset.

    :param points: points in general position
    :type points: Sequence[Point]
    :param table: precomputed triple radius table, defaults to None
    :type table: Optional[TripleRadiusTable]
    :raises NotGeneralPositionError: Not general position exception
    :return: optimal subset certificate
    :rtype: SubsetCertificate
    """
    check_general_position(points=points)
    table = table if table is not None else TripleRadiusTable(points=points)
    conflicts = [set(first) | set(second) for first, second in radius_conflicts(table)]
    num_points = len(points)
    for size in range(num_points, -1, -1):
        for subset in itertools.combinations(range(num_points), size):
            members = set(subset)
            if not any(conflict <= members for conflict in conflicts):
                return build_certificate(table=table, chosen=subset, optimal=True)
    raise AssertionError("the empty subset is always valid.")  # pragma: no cover
