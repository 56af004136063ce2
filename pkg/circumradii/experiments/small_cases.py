"""Small cases experiment module."""

from typing import Any, Optional, Sequence, Union

from circumradii.bounds.formulas import SMALL_CASES
from circumradii.callbacks.base import BaseCallback
from circumradii.experiments.base import BaseExperiment, BaseExperimentConfig
from circumradii.experiments.generators import GeneratorConfig, generate_instance
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point
from circumradii.subsets.branch_and_bound import max_distinct_subset


class SmallCasesConfig(BaseExperimentConfig):
    """Small cases experiment configuration class.

    Every trial draws ``n`` points, 9 for k=4 and 37 for k=5 unless given,
    and checks that a k-subset with distinct circumradii exists.

    :param k: target subset size, 4 or 5, defaults to 4
    :type k: int
    :param n: number of points, defaults to None (the proven threshold for k)
    :type n: Optional[int]
    """

    def __init__(  # noqa: D107
        self,
        k: int = 4,
        n: Optional[int] = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.k = k
        self.n = n  # type: ignore

    @property
    def k(self) -> int:
        """Target subset size property.

        :return: target subset size
        :rtype: int
        """
        return self._k

    @k.setter
    def k(self, value: int) -> None:
        """Target subset size setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value not in SMALL_CASES:
            raise ValueError(f"k must be one of {sorted(SMALL_CASES)}.")
        self._k = value

    @property
    def n(self) -> int:
        """Number of points property.

        :return: number of points per trial
        :rtype: int
        """
        return self._n

    @n.setter
    def n(self, value: Optional[int]) -> None:
        """Number of points setter.

        :param value: value to be set
        :type value: Optional[int]
        :raises ValueError: Value error exception
        """
        if value is None:
            value = SMALL_CASES[self.k]
        if value < 3:
            raise ValueError("n must be greater than 2.")
        self._n = value


class SmallCases(BaseExperiment):
    """Check that n points in general position hold a k-subset with distinct radii.

    A record fails when the maximum subset is smaller than k; at the proven
    thresholds (9 points for k=4, 37 for k=5) a failure would be a
    counterexample and is kept verbatim in the record.
    """

    name = "small_cases"
    config_type = SmallCasesConfig

    def __init__(  # noqa: D107
        self,
        config: Optional[SmallCasesConfig] = None,
        callbacks: Optional[Union[BaseCallback, list[BaseCallback]]] = None,
    ) -> None:
        super().__init__(config=config, callbacks=callbacks)

    @classmethod
    def generate(cls, config: SmallCasesConfig, trial: int) -> list[Point]:  # type: ignore # noqa: E501
        """Generate the instance of a seeded trial.

        :param config: experiment configuration
        :type config: SmallCasesConfig
        :param trial: trial index
        :type trial: int
        :return: instance
        :rtype: list[Point]
        """
        return generate_instance(
            GeneratorConfig(
                seed=config.seed,
                n=config.n,
                grid=config.grid,
                mode=config.mode,
                trial=trial,
            )
        )

    @classmethod
    def evaluate_instance(  # type: ignore
        cls,
        config: SmallCasesConfig,
        points: Sequence[Point],
        trial: int,
        grid: int,
    ) -> ExperimentRecord:
        """Evaluate one instance.

        :param config: experiment configuration
        :type config: SmallCasesConfig
        :param points: instance
        :type points: Sequence[Point]
        :param trial: trial index
        :type trial: int
        :param grid: grid the instance was drawn from, 0 if supplied
        :type grid: int
        :return: trial record
        :rtype: ExperimentRecord
        """
        certificate = max_distinct_subset(points=points)
        return cls.make_record(
            config=config,
            trial=trial,
            n=len(points),
            grid=grid,
            payload={
                "k": config.k,
                "subset_size": certificate.size,
                "digest": certificate.digest(),
                "certificate": certificate.to_dict(),
                "points": [point.to_string() for point in points],
                "passed": certificate.size >= config.k,
            },
        )


def experiment_small_cases(
    k: int,
    trials: int,
    seed: int,
    **kwargs: Any,
) -> list[ExperimentRecord]:
    """Run the small cases experiment.

    :param k: target subset size, 4 or 5
    :type k: int
    :param trials: number of seeded trials
    :type trials: int
    :param seed: seed
    :type seed: int
    :return: records in trial order
    :rtype: list[ExperimentRecord]
    """
    config = SmallCasesConfig(k=k, trials=trials, seed=seed, **kwargs)
    records, _ = SmallCases(config=config).run()
    return records
