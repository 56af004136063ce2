"""Bounds exception module."""


class KTooSmallError(Exception):
    """K too small exception."""


class BoundShapeError(Exception):
    """Bound shape exception."""
