"""Test checks module."""

from typing import Any

import pytest

from circumradii.callbacks import History, Quarantine
from circumradii.callbacks.base import BaseCallback
from circumradii.utils.checks import check_callbacks


@pytest.mark.parametrize(
    "callbacks, expected_cls",
    [
        (
            None,
            BaseCallback,
        ),
        (
            History(),
            BaseCallback,
        ),
        (
            [
                History(name="history"),
                Quarantine(path="quarantine.jsonl"),
            ],
            BaseCallback,
        ),
        (
            [History(), History(name="other")],
            History,
        ),
    ],
)
def test_check_callbacks(
    callbacks: Any,
    expected_cls: type[BaseCallback],
) -> None:
    """Test check_callbacks function.

    :param callbacks: callbacks
    :type callbacks: Any
    :param expected_cls: expected callback class
    :type expected_cls: type[BaseCallback]
    """
    check_callbacks(
        callbacks=callbacks,
        expected_cls=expected_cls,
    )


@pytest.mark.parametrize(
    "callbacks, expected_cls",
    [
        (
            Quarantine(path="quarantine.jsonl"),
            History,
        ),
        (
            [History(), Quarantine(path="quarantine.jsonl")],
            History,
        ),
        (
            "history",
            BaseCallback,
        ),
        (
            (History(),),
            BaseCallback,
        ),
    ],
)
def test_check_callbacks_exceptions(
    callbacks: Any,
    expected_cls: type[BaseCallback],
) -> None:
    """Test check_callbacks function exception.

    :param callbacks: callbacks
    :type callbacks: Any
    :param expected_cls: expected callback class
    :type expected_cls: type[BaseCallback]
    """
    with pytest.raises(TypeError):
        check_callbacks(
            callbacks=callbacks,
            expected_cls=expected_cls,
        )
