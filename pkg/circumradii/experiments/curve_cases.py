"""Points on a conic experiment module."""

from typing import Any, Optional, Sequence, Union

from circumradii.bounds.formulas import MIN_K, lemma_m_bound
from circumradii.callbacks.base import BaseCallback
from circumradii.experiments.base import BaseExperiment, BaseExperimentConfig
from circumradii.experiments.generators import GeneratorConfig, ParabolaGenerator
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point
from circumradii.subsets.branch_and_bound import max_distinct_subset


def guaranteed_k(n: int) -> Optional[int]:
    """Largest k whose curve bound is reached by n points.

    :param n: number of points on the curve
    :type n: int
    :return: largest k with lemma_m_bound(k) <= n, None below lemma_m_bound(4)
    :rtype: Optional[int]
    """
    k = MIN_K
    if lemma_m_bound(k) > n:
        return None
    while lemma_m_bound(k + 1) <= n:
        k += 1
    return k


class CurveCasesConfig(BaseExperimentConfig):
    """Points on a conic experiment configuration class.

    The grid bounds the curve parameter: points are (t, t^2) with
    -grid/2 <= t < grid/2.

    :param min_n: minimum number of points, defaults to 6
    :type min_n: int
    :param max_n: maximum number of points, defaults to 10
    :type max_n: int
    """

    def __init__(  # noqa: D107
        self,
        min_n: int = 6,
        max_n: int = 10,
        **kwargs: Any,
    ) -> None:
        kwargs.setdefault("grid", 40)
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
        if value > self.grid:
            raise ValueError("max_n must not exceed the number of curve parameters.")
        self._max_n = value


class CurveCases(BaseExperiment):
    """Maximum distinct-radii subsets of points on the parabola y = x^2.

    A trial fails when n reaches lemma_m_bound(k) but the maximum subset is
    smaller than k.
    """

    name = "curve_cases"
    config_type = CurveCasesConfig

    def __init__(  # noqa: D107
        self,
        config: Optional[CurveCasesConfig] = None,
        callbacks: Optional[Union[BaseCallback, list[BaseCallback]]] = None,
    ) -> None:
        super().__init__(config=config, callbacks=callbacks)

    @classmethod
    def generate(cls, config: CurveCasesConfig, trial: int) -> list[Point]:  # type: ignore # noqa: E501
        """Generate the instance of a seeded trial.

        :param config: experiment configuration
        :type config: CurveCasesConfig
        :param trial: trial index
        :type trial: int
        :return: instance
        :rtype: list[Point]
        """
        n = int(config.aux_rng(trial=trial).integers(config.min_n, config.max_n + 1))
        generator = ParabolaGenerator(
            config=GeneratorConfig(
                seed=config.seed,
                n=n,
                grid=config.grid,
                mode=config.mode,
                trial=trial,
            )
        )
        return generator.generate()

    @classmethod
    def evaluate_instance(  # type: ignore
        cls,
        config: CurveCasesConfig,
        points: Sequence[Point],
        trial: int,
        grid: int,
    ) -> ExperimentRecord:
        """Evaluate one instance.

        :param config: experiment configuration
        :type config: CurveCasesConfig
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
        k = guaranteed_k(n=len(points))
        return cls.make_record(
            config=config,
            trial=trial,
            n=len(points),
            grid=grid,
            payload={
                "subset_size": certificate.size,
                "guaranteed_k": k,
                "digest": certificate.digest(),
                "points": [point.to_string() for point in points],
                "passed": k is None or certificate.size >= k,
            },
        )


def experiment_curve_cases(
    trials: int,
    seed: int,
    **kwargs: Any,
) -> list[ExperimentRecord]:
    """Run the points on a conic experiment.

    :param trials: number of seeded trials
    :type trials: int
    :param seed: seed
    :type seed: int
    :return: records in trial order
    :rtype: list[ExperimentRecord]
    """
    config = CurveCasesConfig(trials=trials, seed=seed, **kwargs)
    records, _ = CurveCases(config=config).run()
    return records
