"""Test extremal configuration search module."""

import pytest

from circumradii.bounds.exceptions import KTooSmallError
from circumradii.experiments import ExtremalSearch, SearchConfig, search_extremal
from circumradii.geometry.position import is_general_position
from circumradii.subsets.certificates import verify_certificate


def test_search_finds_small_subset() -> None:
    """Test four grid points without a 4-subset with distinct radii are found."""
    result = search_extremal(k=4, n=4, iterations=2000, seed=0)
    payload = result.record.payload
    assert result.record.passed
    assert payload["below_k"]
    assert payload["best_size"] == result.certificate.size == 3
    assert payload["iterations_run"] <= 2000
    assert is_general_position(points=result.points).ok
    assert verify_certificate(points=result.points, certificate=result.certificate)
    assert payload["points"] == [point.to_string() for point in result.points]


def test_search_deterministic() -> None:
    """Test the same seed gives the same run."""
    first = search_extremal(k=4, n=6, iterations=50, seed=3, stagnation=10)
    second = search_extremal(k=4, n=6, iterations=50, seed=3, stagnation=10)
    assert first.record.to_json() == second.record.to_json()
    assert first.record.payload["restarts"] >= 0


def test_search_no_iterations() -> None:
    """Test zero iterations keeps the first instance."""
    result = ExtremalSearch(config=SearchConfig(k=5, n=6, iterations=0)).search()
    assert result.record.payload["iterations_run"] == 0
    assert result.record.payload["restarts"] == 0
    assert result.record.n == 6


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"k": 4, "n": 9, "iterations": 10}, ValueError),
        ({"k": 4, "n": 2, "iterations": 10}, ValueError),
        ({"k": 3, "n": 5, "iterations": 10}, KTooSmallError),
        ({"k": 4, "n": 5, "iterations": -1}, ValueError),
        ({"k": 4, "n": 5, "iterations": 10, "stagnation": 0}, ValueError),
    ],
)
def test_search_config_errors(kwargs: dict, error: type[Exception]) -> None:
    """Test invalid search configurations.

    :param kwargs: configuration arguments
    :type kwargs: dict
    :param error: expected exception
    :type error: type[Exception]
    """
    with pytest.raises(error):
        SearchConfig(**kwargs)
