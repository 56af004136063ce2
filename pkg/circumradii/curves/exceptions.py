"""Locus curves exception module."""


class DegeneratePairError(Exception):
    """Degenerate pair exception."""


class SamePairError(Exception):
    """Same pair exception."""


class NonpositiveRadiusError(Exception):
    """Nonpositive radius exception."""


class ZeroPolynomialError(Exception):
    """Zero polynomial exception."""
