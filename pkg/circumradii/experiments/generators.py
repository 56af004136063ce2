"""Instance generators module."""

import abc
import itertools
from typing import Optional, Union

import numpy as np  # type: ignore

from circumradii.experiments.exceptions import GenerationTimeoutError
from circumradii.geometry.base import Point, PositionMode
from circumradii.geometry.predicates import (
    GeneralizedCircle,
    circle_through,
    orientation,
)
from circumradii.utils.logger import logger

MAX_SEED = 2**64
RETRIES_PER_POINT = 200
BASE_RETRIES = 1000


class GeneratorConfig:
    """Instance generator configuration class.

    :param seed: 64-bit unsigned seed
    :type seed: int
    :param n: number of points
    :type n: int
    :param grid: grid size M, coordinates are drawn from {0, ..., M - 1}
    :type grid: int
    :param mode: general position convention, defaults to PAPER
    :type mode: Union[PositionMode, str]
    :param max_retries: redraw budget, defaults to None (200 * n + 1000)
    :type max_retries: Optional[int]
    :param trial: trial index mixed into the seed, defaults to 0
    :type trial: int
    """

    def __init__(  # noqa: D107
        self,
        seed: int,
        n: int,
        grid: int,
        mode: Union[PositionMode, str] = PositionMode.PAPER,
        max_retries: Optional[int] = None,
        trial: int = 0,
    ) -> None:
        self.seed = seed
        self.n = n
        self.grid = grid
        self.mode = mode  # type: ignore
        self.max_retries = max_retries  # type: ignore
        self.trial = trial

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
    def n(self) -> int:
        """Number of points property.

        :return: number of points
        :rtype: int
        """
        return self._n

    @n.setter
    def n(self, value: int) -> None:
        """Number of points setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 1:
            raise ValueError("n must be greater than 0.")
        self._n = value

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
        if value**2 < 4 * self.n:
            logger.warning(
                "Grid %s is small for %s points, generation may time out",
                value,
                self.n,
            )
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
    def max_retries(self) -> int:
        """Redraw budget property.

        :return: maximum number of rejected draws
        :rtype: int
        """
        return self._max_retries

    @max_retries.setter
    def max_retries(self, value: Optional[int]) -> None:
        """Redraw budget setter.

        :param value: value to be set
        :type value: Optional[int]
        :raises ValueError: Value error exception
        """
        if value is None:
            value = RETRIES_PER_POINT * self.n + BASE_RETRIES
        if value < 0:
            raise ValueError("max_retries must be greater or equal than 0.")
        self._max_retries = value

    @property
    def trial(self) -> int:
        """Trial index property.

        :return: trial index
        :rtype: int
        """
        return self._trial

    @trial.setter
    def trial(self, value: int) -> None:
        """Trial index setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 0:
            raise ValueError("trial must be greater or equal than 0.")
        self._trial = value

    def rng(self) -> np.random.Generator:
        """Random generator of this (seed, trial).

        :return: random generator
        :rtype: numpy.random.Generator
        """
        return np.random.default_rng(np.random.SeedSequence([self.seed, self.trial]))

    def __repr__(self) -> str:
        """Repr method.

        :return: repr value
        :rtype: str
        """
        return (
            f"{self.__class__.__name__}"
            f"({', '.join(f'{k[1:]}={v}' for k, v in self.__dict__.items())})"
        )


class BaseInstanceGenerator(abc.ABC):
    """Abstract class representing an instance generator.

    Points are drawn one at a time and a draw is rejected, then redrawn,
    when it duplicates a point or breaks general position with the points
    already accepted.

    :param config: generator configuration
    :type config: GeneratorConfig
    """

    def __init__(  # noqa: D107
        self,
        config: GeneratorConfig,
    ) -> None:
        if not isinstance(config, GeneratorConfig):
            raise TypeError("config must be of type GeneratorConfig.")
        self.config = config

    @abc.abstractmethod
    def _draw(self, rng: np.random.Generator) -> Point:
        pass

    def _accepts(
        self,
        points: list[Point],
        circles: list[GeneralizedCircle],
        candidate: Point,
    ) -> bool:
        if candidate in points:
            return False
        if self.config.mode is PositionMode.STRICT and any(
            orientation(a, b, candidate) == 0
            for a, b in itertools.combinations(points, 2)
        ):
            return False
        return not any(circle.contains(candidate) for circle in circles)

    def generate(self) -> list[Point]:
        """Generate an instance.

        :raises GenerationTimeoutError: Generation timeout exception
        :return: points in general position
        :rtype: list[Point]
        """
        rng = self.config.rng()
        points: list[Point] = []
        # circles (or lines) through every accepted triple
        circles: list[GeneralizedCircle] = []
        num_rejected = 0
        while len(points) < self.config.n:
            candidate = self._draw(rng=rng)
            if not self._accepts(points=points, circles=circles, candidate=candidate):
                num_rejected += 1
                if num_rejected > self.config.max_retries:
                    raise GenerationTimeoutError(
                        f"no instance after {num_rejected} redraws "
                        f"({len(points)} of {self.config.n} points placed), "
                        f"grid {self.config.grid} is too small."
                    )
                continue
            circles.extend(
                circle_through(a, b, candidate)
                for a, b in itertools.combinations(points, 2)
            )
            points.append(candidate)
        logger.debug(
            "Generated %s points after %s redraws", len(points), num_rejected
        )
        return points


class LatticeGenerator(BaseInstanceGenerator):
    """Uniform draws from the integer grid {0, ..., M - 1}^2."""

    def _draw(self, rng: np.random.Generator) -> Point:
        x, y = rng.integers(self.config.grid, size=2)
        return Point(int(x), int(y))


class ParabolaGenerator(BaseInstanceGenerator):
    """Draws (t, t^2) on the parabola y = x^2 with t in {-M/2, ..., M/2 - 1}.

    No three points of a conic are collinear; four of them are concyclic iff
    their parameters sum to zero, which the rejection step rules out.
    """

    def _draw(self, rng: np.random.Generator) -> Point:
        t = int(rng.integers(self.config.grid)) - self.config.grid // 2
        return Point(t, t * t)


def generate_instance(cfg: GeneratorConfig) -> list[Point]:
    """Generate a lattice instance in general position.

    :param cfg: generator configuration
    :type cfg: GeneratorConfig
    :raises GenerationTimeoutError: Generation timeout exception
    :return: points in general position in ``cfg.mode``
    :rtype: list[Point]
    """
    return LatticeGenerator(config=cfg).generate()
