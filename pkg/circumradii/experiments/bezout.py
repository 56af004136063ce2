"""Bezout bounds experiment module."""

import itertools
from typing import Any, Optional, Sequence, Union

from circumradii.callbacks.base import BaseCallback
from circumradii.curves.intersection import (
    IntersectionReport,
    IntersectionStatus,
    count_common_points,
)
from circumradii.curves.locus import circle_poly, radius_locus
from circumradii.experiments.base import BaseExperiment, BaseExperimentConfig
from circumradii.experiments.generators import GeneratorConfig, generate_instance
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point
from circumradii.geometry.exceptions import NotGeneralPositionError
from circumradii.geometry.predicates import (
    circumcenter,
    orientation,
    squared_circumradius,
)

LOCUS_DEGREE = 6
SHEAR_SEED_RANGE = 2**32


def circle_triple(points: Sequence[Point]) -> tuple[Point, Point, Point]:
    """First non-collinear triple, trying points 0, 2, 4 first.

    :param points: points, not all collinear
    :type points: Sequence[Point]
    :raises NotGeneralPositionError: Not general position exception
    :return: three non-collinear points
    :rtype: tuple[Point, Point, Point]
    """
    preferred = [(0, 2, 4)] if len(points) > 4 else []
    for i, j, k in preferred + list(itertools.combinations(range(len(points)), 3)):
        if orientation(points[i], points[j], points[k]) != 0:
            return points[i], points[j], points[k]
    raise NotGeneralPositionError("all points are collinear.")


def within_bezout(report: IntersectionReport, limit: int) -> bool:
    """Check a report against a Bezout limit.

    :param report: intersection report
    :type report: IntersectionReport
    :param limit: maximum number of common points
    :type limit: int
    :return: True for a common component or at most ``limit`` points
    :rtype: bool
    """
    if report.status is IntersectionStatus.COMMON_COMPONENT:
        return True
    return report.x_root_count <= min(limit, report.bezout_bound)


class BezoutConfig(BaseExperimentConfig):
    """Bezout bounds experiment configuration class.

    :param min_n: minimum number of points, defaults to 5
    :type min_n: int
    :param max_n: maximum number of points, defaults to 8
    :type max_n: int
    :param pair_pair: also intersect two locus curves, defaults to True
    :type pair_pair: bool
    """

    def __init__(  # noqa: D107
        self,
        min_n: int = 5,
        max_n: int = 8,
        pair_pair: bool = True,
        **kwargs: Any,
    ) -> None:
        kwargs.setdefault("grid", 50)
        super().__init__(**kwargs)
        self.min_n = min_n
        self.max_n = max_n
        self.pair_pair = pair_pair

    @property
    def min_n(self) -> int:
        """Minimum number of points property.

        :return: minimum number of points
        :rtype: int
        """
        return self._min_n

    @min_n.setter
    def min_n(self, value: int) -> None:
        """Minimum number of points setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 5:
            raise ValueError("min_n must be at least 5.")
        self._min_n = value

    @property
    def max_n(self) -> int:
        """Maximum number of points property.

        :return: maximum number of points
        :rtype: int
        """
        return self._max_n

    @max_n.setter
    def max_n(self, value: int) -> None:
        """Maximum number of points setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < self.min_n:
            raise ValueError("max_n must be greater or equal than min_n.")
        self._max_n = value

    @property
    def pair_pair(self) -> bool:
        """Locus against locus flag property.

        :return: flag
        :rtype: bool
        """
        return self._pair_pair

    @pair_pair.setter
    def pair_pair(self, value: bool) -> None:
        """Locus against locus flag setter.

        :param value: value to be set
        :type value: bool
        """
        self._pair_pair = bool(value)


class Bezout(BaseExperiment):
    """Intersect locus curves with circles and with each other.

    Points 0..3 give the locus curve of pairs (0, 1) and (2, 3), tested
    against the circumcircle of points 0, 2, 4 (or of the first non-collinear
    triple) and, optionally, against the locus curve of pairs (0, 2) and
    (1, 3). Each trial checks the degree bound 6, at most 12 points against
    a circle and at most 36 points against another locus curve unless a
    common component is reported.
    """

    name = "bezout"
    config_type = BezoutConfig

    def __init__(  # noqa: D107
        self,
        config: Optional[BezoutConfig] = None,
        callbacks: Optional[Union[BaseCallback, list[BaseCallback]]] = None,
    ) -> None:
        super().__init__(config=config, callbacks=callbacks)

    @classmethod
    def generate(cls, config: BezoutConfig, trial: int) -> list[Point]:  # type: ignore
        """Generate the instance of a seeded trial.

        :param config: experiment configuration
        :type config: BezoutConfig
        :param trial: trial index
        :type trial: int
        :return: instance
        :rtype: list[Point]
        """
        n = int(config.aux_rng(trial=trial).integers(config.min_n, config.max_n + 1))
        return generate_instance(
            GeneratorConfig(
                seed=config.seed,
                n=n,
                grid=config.grid,
                mode=config.mode,
                trial=trial,
            )
        )

    @classmethod
    def evaluate_instance(  # type: ignore
        cls,
        config: BezoutConfig,
        points: Sequence[Point],
        trial: int,
        grid: int,
    ) -> ExperimentRecord:
        """Evaluate one instance.

        :param config: experiment configuration
        :type config: BezoutConfig
        :param points: instance of at least 5 points
        :type points: Sequence[Point]
        :param trial: trial index
        :type trial: int
        :param grid: grid the instance was drawn from, 0 if supplied
        :type grid: int
        :raises ValueError: Value error exception
        :return: trial record
        :rtype: ExperimentRecord
        """
        if len(points) < 5:
            raise ValueError("instance must hold at least 5 points.")
        shear_seed = int(
            config.aux_rng(trial=trial, stream=2).integers(SHEAR_SEED_RANGE)
        )

        a, b, c, d = points[:4]
        locus = radius_locus(a, b, c, d)
        degree = int(locus.total_degree) if not locus.is_zero else -1
        payload: dict[str, Any] = {"locus_degree": degree}
        passed = degree <= LOCUS_DEGREE

        if not locus.is_zero:
            p, q, r = circle_triple(points[:5])
            circle = circle_poly(
                center=circumcenter(p, q, r),
                r2=squared_circumradius(p, q, r).value,
            )
            circle_report = count_common_points(locus, circle, shear_seed=shear_seed)
            payload["circle"] = circle_report.to_dict()
            passed &= within_bezout(circle_report, limit=2 * LOCUS_DEGREE)

            if config.pair_pair:
                other = radius_locus(a, c, b, d)
                if not other.is_zero:
                    pair_report = count_common_points(
                        locus, other, shear_seed=shear_seed
                    )
                    payload["pair_pair"] = pair_report.to_dict()
                    passed &= within_bezout(
                        pair_report, limit=LOCUS_DEGREE * LOCUS_DEGREE
                    )
        payload["passed"] = bool(passed)
        return cls.make_record(
            config=config, trial=trial, n=len(points), grid=grid, payload=payload
        )


def experiment_bezout(trials: int, seed: int, **kwargs: Any) -> list[ExperimentRecord]:
    """Run the Bezout bounds experiment.

    :param trials: number of seeded trials
    :type trials: int
    :param seed: seed
    :type seed: int
    :return: records in trial order
    :rtype: list[ExperimentRecord]
    """
    config = BezoutConfig(trials=trials, seed=seed, **kwargs)
    records, _ = Bezout(config=config).run()
    return records
