"""Experiments exception module."""


class GenerationTimeoutError(Exception):
    """Generation timeout exception."""
