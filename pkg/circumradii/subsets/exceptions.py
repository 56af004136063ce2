"""Radius subsets exception module."""


class NoCoincidenceError(Exception):
    """No coincidence exception."""


class InvalidCertificateError(Exception):
    """Invalid certificate exception."""
