"""Utils exception module."""


class PointSetFormatError(Exception):
    """Point set format exception."""
