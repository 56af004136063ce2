"""Callbacks init."""

from .base import BaseCallback
from .history import History
from .quarantine import Quarantine

__all__ = [
    "BaseCallback",
    "History",
    "Quarantine",
]
