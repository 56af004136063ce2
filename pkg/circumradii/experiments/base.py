"""Base experiment module."""

import abc
from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np  # type: ignore

from circumradii.callbacks.base import BaseCallback
from circumradii.experiments.generators import MAX_SEED
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point, PositionMode
from circumradii.utils.checks import check_callbacks
from circumradii.utils.logger import logger
from circumradii.utils.parallel import run_trials

INJECTED_GRID = 0  # grid recorded for instances supplied by the caller


class BaseExperimentConfig(abc.ABC):  # noqa: B024
    """Abstract class representing an experiment configuration class.

    :param trials: number of seeded trials, defaults to 100
    :type trials: int
    :param seed: 64-bit unsigned seed, defaults to 0
    :type seed: int
    :param grid: grid size of generated instances, defaults to 100
    :type grid: int
    :param mode: general position convention, defaults to PAPER
    :type mode: Union[PositionMode, str]
    :param num_jobs: number of processes, defaults to 1
    :type num_jobs: int
    :param verbose: progress bar flag, defaults to False
    :type verbose: bool
    """

    def __init__(  # noqa: D107
        self,
        trials: int = 100,
        seed: int = 0,
        grid: int = 100,
        mode: Union[PositionMode, str] = PositionMode.PAPER,
        num_jobs: int = 1,
        verbose: bool = False,
    ) -> None:
        self.trials = trials
        self.seed = seed
        self.grid = grid
        self.mode = mode  # type: ignore
        self.num_jobs = num_jobs
        self.verbose = verbose

    @property
    def trials(self) -> int:
        """Number of trials property.

        :return: number of seeded trials
        :rtype: int
        """
        return self._trials

    @trials.setter
    def trials(self, value: int) -> None:
        """Number of trials setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 0:
            raise ValueError("trials must be greater or equal than 0.")
        self._trials = value

    @property
    def seed(self) -> int:
        """Seed property.

        :return: seed
        :rtype: int
        """
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        """Seed setter.

        :param value: value to be set
        :type value: int
        :raises TypeError: Type error exception
        :raises ValueError: Value error exception
        """
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError("seed must be of type int.")
        if not 0 <= value < MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer.")
        self._seed = value

    @property
    def grid(self) -> int:
        """Grid size property.

        :return: grid size
        :rtype: int
        """
        return self._grid

    @grid.setter
    def grid(self, value: int) -> None:
        """Grid size setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 1:
            raise ValueError("grid must be greater than 0.")
        self._grid = value

    @property
    def mode(self) -> PositionMode:
        """General position mode property.

        :return: general position convention
        :rtype: PositionMode
        """
        return self._mode

    @mode.setter
    def mode(self, value: Union[PositionMode, str]) -> None:
        """General position mode setter.

        :param value: value to be set
        :type value: Union[PositionMode, str]
        :raises ValueError: Value error exception
        """
        self._mode = PositionMode(value)

    @property
    def num_jobs(self) -> int:
        """Number of jobs property.

        :return: number of processes
        :rtype: int
        """
        return self._num_jobs

    @num_jobs.setter
    def num_jobs(self, value: int) -> None:
        """Number of jobs setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 1:
            raise ValueError("num_jobs must be greater than 0.")
        self._num_jobs = value

    @property
    def verbose(self) -> bool:
        """Verbose flag property.

        :return: progress bar flag
        :rtype: bool
        """
        return self._verbose

    @verbose.setter
    def verbose(self, value: bool) -> None:
        """Verbose flag setter.

        :param value: value to be set
        :type value: bool
        :raises TypeError: Type error exception
        """
        if not isinstance(value, bool):
            raise TypeError("verbose must be of type bool.")
        self._verbose = value

    def aux_rng(self, trial: int, stream: int = 1) -> np.random.Generator:
        """Random generator for the non-geometric draws of a trial.

        :param trial: trial index
        :type trial: int
        :param stream: stream index, defaults to 1 (0 is the instance generator)
        :type stream: int
        :return: random generator independent of the instance generator
        :rtype: numpy.random.Generator
        """
        return np.random.default_rng(
            np.random.SeedSequence([self.seed, trial, stream])
        )

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return (
            f"{self.__class__.__name__}"
            f"({', '.join(f'{k[1:]}={v}' for k, v in self.__dict__.items())})"
        )


class BaseExperiment(abc.ABC):
    """Abstract class representing an experiment.

    Seeded trials may run in a process pool; their records are merged in
    trial order, so the output does not depend on the schedule. Instances
    given to :func:`run` are evaluated after the seeded trials.

    :param config: configuration parameters, defaults to None
    :type config: Optional[BaseExperimentConfig]
    :param callbacks: callbacks, defaults to None
    :type callbacks: Optional[Union[BaseCallback, list[BaseCallback]]]
    """

    name = "base"
    config_type = BaseExperimentConfig

    def __init__(  # noqa: D107
        self,
        config: Optional[BaseExperimentConfig] = None,
        callbacks: Optional[Union[BaseCallback, list[BaseCallback]]] = None,
    ) -> None:
        check_callbacks(callbacks=callbacks, expected_cls=BaseCallback)
        self.callbacks = callbacks  # type: ignore
        self.config = config  # type: ignore

    @property
    def callbacks(self) -> list[BaseCallback]:
        """Callbacks property.

        :return: callbacks
        :rtype: list[BaseCallback]
        """
        return self._callbacks

    @callbacks.setter
    def callbacks(
        self,
        value: Optional[Union[BaseCallback, list[BaseCallback]]],
    ) -> None:
        """Callbacks setter.

        :param value: value to be set
        :type value: Optional[Union[BaseCallback, list[BaseCallback]]]
        """
        if value is None:
            self._callbacks: list[BaseCallback] = []
        elif isinstance(value, BaseCallback):
            self._callbacks = [value]
        else:
            self._callbacks = value

    @property
    def config(self) -> BaseExperimentConfig:
        """Config property.

        :return: configuration parameters of the experiment
        :rtype: BaseExperimentConfig
        """
        return self._config

    @config.setter
    def config(self, value: Optional[BaseExperimentConfig]) -> None:
        """Config setter.

        :param value: value to be set
        :type value: Optional[BaseExperimentConfig]
        :raises TypeError: Type error exception
        """
        if value is None:
            self._config = self.config_type()
        elif not isinstance(value, self.config_type):
            raise TypeError(f"value must be of type {self.config_type.__name__}.")
        else:
            self._config = value

    @classmethod
    @abc.abstractmethod
    def generate(cls, config: Any, trial: int) -> list[Point]:
        """Generate the instance of a seeded trial.

        :param config: experiment configuration
        :type config: Any
        :param trial: trial index
        :type trial: int
        :return: instance
        :rtype: list[Point]
        """

    @classmethod
    @abc.abstractmethod
    def evaluate_instance(
        cls,
        config: Any,
        points: Sequence[Point],
        trial: int,
        grid: int,
    ) -> ExperimentRecord:
        """Evaluate one instance.

        :param config: experiment configuration
        :type config: Any
        :param points: instance
        :type points: Sequence[Point]
        :param trial: trial index
        :type trial: int
        :param grid: grid the instance was drawn from, 0 if supplied
        :type grid: int
        :return: trial record
        :rtype: ExperimentRecord
        """

    @classmethod
    def run_trial(cls, config: Any, trial: int) -> ExperimentRecord:
        """Run one seeded trial.

        :param config: experiment configuration
        :type config: Any
        :param trial: trial index
        :type trial: int
        :return: trial record
        :rtype: ExperimentRecord
        """
        points = cls.generate(config=config, trial=trial)
        return cls.evaluate_instance(
            config=config, points=points, trial=trial, grid=config.grid
        )

    @classmethod
    def make_record(
        cls,
        config: Any,
        trial: int,
        n: int,
        grid: int,
        payload: dict[str, Any],
    ) -> ExperimentRecord:
        """Build a record of this experiment.

        :param config: experiment configuration
        :type config: Any
        :param trial: trial index
        :type trial: int
        :param n: number of points
        :type n: int
        :param grid: grid size
        :type grid: int
        :param payload: JSON-compatible result payload
        :type payload: dict[str, Any]
        :return: experiment record
        :rtype: ExperimentRecord
        """
        return ExperimentRecord(
            experiment=cls.name,
            seed=config.seed,
            trial=trial,
            n=n,
            grid=grid,
            mode=config.mode.value,
            payload=payload,
        )

    def _get_callbacks_logs(self) -> dict[str, Any]:
        return {callback.name: callback.logs for callback in self.callbacks}

    def _dispatch(self, record: ExperimentRecord) -> ExperimentRecord:
        for callback in self.callbacks:
            callback.on_trial_end(record=record)
        return record

    def run(
        self,
        instances: Optional[Sequence[Sequence[Point]]] = None,
    ) -> Tuple[list[ExperimentRecord], dict[str, Any]]:
        """Run the experiment.

        Trial end hooks see each record in trial order as soon as it and
        every earlier trial are done, so an exception raised by a later trial
        leaves earlier failures already quarantined.

        :param instances: extra instances evaluated after the seeded trials,
            defaults to None
        :type instances: Optional[Sequence[Sequence[Point]]]
        :return: records in trial order and callbacks logs
        :rtype: Tuple[list[ExperimentRecord], dict[str, Any]]
        """
        logger.info("Running %s with %s", self.name, self.config)
        for callback in self.callbacks:
            callback.on_run_start(config=self.config)
        records = [
            self._dispatch(record=record)
            for record in run_trials(
                function=self.run_trial,
                arguments=[(self.config, trial) for trial in range(self.config.trials)],
                num_jobs=self.config.num_jobs,
                verbose=self.config.verbose,
            )
        ]
        for offset, points in enumerate(instances or []):
            record = self.evaluate_instance(
                config=self.config,
                points=list(points),
                trial=self.config.trials + offset,
                grid=INJECTED_GRID,
            )
            records.append(self._dispatch(record=record))
        for callback in self.callbacks:
            callback.on_run_end(records=records)
        num_failed = sum(not record.passed for record in records)
        logger.info(
            "Finished %s: %s records, %s failed", self.name, len(records), num_failed
        )
        return records, self._get_callbacks_logs()

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return (
            f"{self.__class__.__name__}(config={self.config}, "
            f"callbacks=[{', '.join([*map(str, self.callbacks)])}])"
        )
