"""Excluded point cases experiment module."""

from collections import Counter
from typing import Any, Optional, Sequence, Union

from circumradii.callbacks.base import BaseCallback
from circumradii.experiments.base import (
    INJECTED_GRID,
    BaseExperiment,
    BaseExperimentConfig,
)
from circumradii.experiments.generators import GeneratorConfig, generate_instance
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point
from circumradii.subsets.base import ExclusionCase
from circumradii.subsets.certificates import verify_certificate
from circumradii.subsets.exceptions import NoCoincidenceError
from circumradii.subsets.greedy import greedy_maximal_subset
from circumradii.utils.logger import logger


class GapCasesConfig(BaseExperimentConfig):
    """Excluded point cases experiment configuration class.

    :param min_n: minimum number of points, defaults to 6
    :type min_n: int
    :param max_n: maximum number of points, defaults to 12
    :type max_n: int
    """

    def __init__(  # noqa: D107
        self,
        min_n: int = 6,
        max_n: int = 12,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.min_n = min_n
        self.max_n = max_n

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
        if value < 3:
            raise ValueError("min_n must be greater than 2.")
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


class GapCases(BaseExperiment):
    """Classify every point excluded from a greedy maximal subset.

    Each excluded point must lie on a circle through two chosen points
    (``CASE_CIRCLE``) or on the locus curve of two chosen pairs
    (``CASE_LOCUS``). A point with neither explanation fails the trial.
    Seeded trials scan points in a random order, supplied instances in
    input order.
    """

    name = "gap_cases"
    config_type = GapCasesConfig

    def __init__(  # noqa: D107
        self,
        config: Optional[GapCasesConfig] = None,
        callbacks: Optional[Union[BaseCallback, list[BaseCallback]]] = None,
    ) -> None:
        super().__init__(config=config, callbacks=callbacks)

    @classmethod
    def generate(cls, config: GapCasesConfig, trial: int) -> list[Point]:  # type: ignore # noqa: E501
        """Generate the instance of a seeded trial.

        :param config: experiment configuration
        :type config: GapCasesConfig
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
        config: GapCasesConfig,
        points: Sequence[Point],
        trial: int,
        grid: int,
    ) -> ExperimentRecord:
        """Evaluate one instance.

        :param config: experiment configuration
        :type config: GapCasesConfig
        :param points: instance
        :type points: Sequence[Point]
        :param trial: trial index
        :type trial: int
        :param grid: grid the instance was drawn from, 0 if supplied
        :type grid: int
        :return: trial record
        :rtype: ExperimentRecord
        """
        n = len(points)
        if grid == INJECTED_GRID:
            order = list(range(n))
        else:
            rng = config.aux_rng(trial=trial, stream=2)
            order = [int(idx) for idx in rng.permutation(n)]
        payload: dict[str, Any] = {"order": order}
        try:
            certificate = greedy_maximal_subset(points=points, order=order)
        except NoCoincidenceError as e:
            logger.info("Trial %s: excluded point without coincidence: %s", trial, e)
            payload.update(
                no_coincidence=1,
                points=[point.to_string() for point in points],
                passed=False,
            )
        else:
            counts = Counter(
                record.case.value for record in certificate.exclusions.values()
            )
            payload.update(
                chosen=list(certificate.chosen),
                case_counts={case.value: counts[case.value] for case in ExclusionCase},
                no_coincidence=0,
                passed=verify_certificate(points=points, certificate=certificate),
            )
        return cls.make_record(
            config=config, trial=trial, n=n, grid=grid, payload=payload
        )


def experiment_gap_cases(
    trials: int,
    seed: int,
    **kwargs: Any,
) -> list[ExperimentRecord]:
    """Run the excluded point cases experiment.

    :param trials: number of seeded trials
    :type trials: int
    :param seed: seed
    :type seed: int
    :return: records in trial order
    :rtype: list[ExperimentRecord]
    """
    config = GapCasesConfig(trials=trials, seed=seed, **kwargs)
    records, _ = GapCases(config=config).run()
    return records
