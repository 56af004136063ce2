"""Checks module."""

from typing import Any

from circumradii.callbacks.base import BaseCallback


def check_callbacks(
    callbacks: Any,
    expected_cls: type[BaseCallback] = BaseCallback,
) -> None:
    """Check callbacks.

    :param callbacks: callbacks
    :type callbacks: Any
    :param expected_cls: expected callback class, defaults to BaseCallback
    :type expected_cls: type[BaseCallback]
    :raises TypeError: Type error exception
    """
    if not (
        callbacks is None
        or isinstance(callbacks, expected_cls)
        or (
            isinstance(callbacks, list)
            and all(isinstance(item, expected_cls) for item in callbacks)
        )
    ):
        raise TypeError(
            f"callbacks must be of type None, "
            f"{expected_cls.__name__} or a list of {expected_cls.__name__}."
        )
