"""Geometry exception module."""


class DuplicatePointError(Exception):
    """Duplicate point exception."""


class NotGeneralPositionError(Exception):
    """Not general position exception."""
