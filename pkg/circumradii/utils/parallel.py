"""Parallel trials module."""

from multiprocessing import Pool
from typing import Any, Callable, Iterator, Sequence

from tqdm import tqdm


def _apply(task: tuple[Callable[..., Any], tuple[Any, ...]]) -> Any:
    function, args = task
    return function(*args)


def run_trials(
    function: Callable[..., Any],
    arguments: Sequence[tuple[Any, ...]],
    num_jobs: int = 1,
    verbose: bool = False,
) -> Iterator[Any]:
    """Run independent trials, possibly in a process pool.

    Results are yielded in argument order whatever the schedule, each one as
    soon as it and every earlier result are done. An exception raised by a
    trial propagates when its turn comes.

    :param function: picklable trial function
    :type function: Callable[..., Any]
    :param arguments: positional arguments of each trial
    :type arguments: Sequence[tuple[Any, ...]]
    :param num_jobs: number of processes, defaults to 1 (no pool)
    :type num_jobs: int
    :param verbose: progress bar flag, defaults to False
    :type verbose: bool
    :return: trial results in argument order
    :rtype: Iterator[Any]
    """
    tasks = [(function, args) for args in arguments]
    if num_jobs == 1:
        results: Iterator[Any] = map(_apply, tasks)
        yield from tqdm(results, total=len(tasks)) if verbose else results
        return
    with Pool(processes=num_jobs) as pool:
        results = pool.imap(_apply, tasks)
        yield from tqdm(results, total=len(tasks)) if verbose else results
