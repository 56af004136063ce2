"""Extremal configuration search module."""

from typing import Any, NamedTuple, Union

import numpy as np  # type: ignore

from circumradii.bounds.formulas import check_k, main_n_bound
from circumradii.experiments.generators import GeneratorConfig, generate_instance
from circumradii.experiments.records import ExperimentRecord
from circumradii.geometry.base import Point, PositionMode
from circumradii.geometry.position import is_general_position
from circumradii.subsets.base import SubsetCertificate
from circumradii.subsets.branch_and_bound import max_distinct_subset
from circumradii.subsets.certificates import verify_certificate
from circumradii.utils.logger import logger

SEARCH_STREAM = 3  # move stream, apart from the restart generators


class SearchConfig(GeneratorConfig):
    """Extremal configuration search configuration class.

    :param k: target subset size
    :type k: int
    :param n: number of points, below main_n_bound(k)
    :type n: int
    :param iterations: number of single-point moves
    :type iterations: int
    :param grid: grid size, defaults to 8
    :type grid: int
    :param seed: 64-bit unsigned seed, defaults to 0
    :type seed: int
    :param stagnation: moves without improvement before a restart, defaults to 50
    :type stagnation: int
    :param mode: general position convention, defaults to PAPER
    :type mode: Union[PositionMode, str]
    """

    def __init__(  # noqa: D107
        self,
        k: int,
        n: int,
        iterations: int,
        grid: int = 8,
        seed: int = 0,
        stagnation: int = 50,
        mode: Union[PositionMode, str] = PositionMode.PAPER,
    ) -> None:
        self.k = k
        super().__init__(seed=seed, n=n, grid=grid, mode=mode)
        self.iterations = iterations
        self.stagnation = stagnation

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
        :raises TypeError: Type error exception
        :raises KTooSmallError: K too small exception
        """
        check_k(k=value)
        self._k = value

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
        if value < 3:
            raise ValueError("n must be greater than 2.")
        if value >= main_n_bound(self.k):
            raise ValueError(
                f"n must be below main_n_bound({self.k}) = {main_n_bound(self.k)}."
            )
        self._n = value

    @property
    def iterations(self) -> int:
        """Number of iterations property.

        :return: number of single-point moves
        :rtype: int
        """
        return self._iterations

    @iterations.setter
    def iterations(self, value: int) -> None:
        """Number of iterations setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 0:
            raise ValueError("iterations must be greater or equal than 0.")
        self._iterations = value

    @property
    def stagnation(self) -> int:
        """Stagnation limit property.

        :return: moves without improvement before a restart
        :rtype: int
        """
        return self._stagnation

    @stagnation.setter
    def stagnation(self, value: int) -> None:
        """Stagnation limit setter.

        :param value: value to be set
        :type value: int
        :raises ValueError: Value error exception
        """
        if value < 1:
            raise ValueError("stagnation must be greater than 0.")
        self._stagnation = value


class SearchResult(NamedTuple):
    """Best instance found by the search."""

    points: list[Point]
    certificate: SubsetCertificate
    record: ExperimentRecord


class ExtremalSearch:
    """Local search for point sets with small maximum distinct-radii subsets.

    Each move replaces one random point by a random grid point. Moves that
    keep general position and do not enlarge the maximum subset are
    accepted; after ``stagnation`` moves without a new best the search
    restarts from a fresh instance. The search stops early once the best
    instance has no k-subset with distinct radii.

    :param config: search configuration
    :type config: SearchConfig
    """

    name = "search"

    def __init__(  # noqa: D107
        self,
        config: SearchConfig,
    ) -> None:
        if not isinstance(config, SearchConfig):
            raise TypeError("config must be of type SearchConfig.")
        self.config = config

    def _restart(self, restarts: int) -> list[Point]:
        cfg = self.config
        return generate_instance(
            GeneratorConfig(
                seed=cfg.seed,
                n=cfg.n,
                grid=cfg.grid,
                mode=cfg.mode,
                trial=restarts,
            )
        )

    def _move(self, rng: np.random.Generator, current: list[Point]) -> list[Point]:
        idx = int(rng.integers(self.config.n))
        x, y = rng.integers(self.config.grid, size=2)
        candidate = list(current)
        candidate[idx] = Point(int(x), int(y))
        return candidate

    def _valid(self, candidate: list[Point]) -> bool:
        if len(set(candidate)) != len(candidate):
            return False
        return is_general_position(points=candidate, mode=self.config.mode).ok

    def search(self) -> SearchResult:
        """Run the search.

        :raises GenerationTimeoutError: Generation timeout exception
        :return: best instance, its certificate and the run record
        :rtype: SearchResult
        """
        cfg = self.config
        rng = np.random.default_rng(
            np.random.SeedSequence([cfg.seed, 0, SEARCH_STREAM])
        )
        restarts = 0
        current = self._restart(restarts=restarts)
        current_size = max_distinct_subset(points=current).size
        best, best_size = current, current_size
        stale = 0
        iterations_run = 0
        for _ in range(cfg.iterations):
            if best_size < cfg.k:
                break
            iterations_run += 1
            candidate = self._move(rng=rng, current=current)
            stale += 1
            if self._valid(candidate=candidate):
                size = max_distinct_subset(points=candidate).size
                if size <= current_size:
                    current, current_size = candidate, size
                if size < best_size:
                    best, best_size = candidate, size
                    stale = 0
                    logger.info(
                        "Search improved to max subset %s after %s moves",
                        best_size,
                        iterations_run,
                    )
            if stale >= cfg.stagnation:
                restarts += 1
                current = self._restart(restarts=restarts)
                current_size = max_distinct_subset(points=current).size
                stale = 0
                if current_size < best_size:
                    best, best_size = current, current_size

        certificate = max_distinct_subset(points=best)
        verified = verify_certificate(points=best, certificate=certificate)
        record = ExperimentRecord(
            experiment=self.name,
            seed=cfg.seed,
            trial=0,
            n=cfg.n,
            grid=cfg.grid,
            mode=cfg.mode.value,
            payload={
                "k": cfg.k,
                "best_size": certificate.size,
                "below_k": certificate.size < cfg.k,
                "iterations_run": iterations_run,
                "restarts": restarts,
                "digest": certificate.digest(),
                "certificate": certificate.to_dict(),
                "points": [point.to_string() for point in best],
                "passed": verified,
            },
        )
        return SearchResult(points=best, certificate=certificate, record=record)


def search_extremal(
    k: int,
    n: int,
    iterations: int,
    seed: int,
    **kwargs: Any,
) -> SearchResult:
    """Search for n points whose maximum distinct-radii subset is small.

    :param k: target subset size
    :type k: int
    :param n: number of points, below main_n_bound(k)
    :type n: int
    :param iterations: number of single-point moves
    :type iterations: int
    :param seed: seed
    :type seed: int
    :raises ValueError: Value error exception
    :return: best instance, its certificate and the run record
    :rtype: SearchResult
    """
    config = SearchConfig(k=k, n=n, iterations=iterations, seed=seed, **kwargs)
    return ExtremalSearch(config=config).search()
