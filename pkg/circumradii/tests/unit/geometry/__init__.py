"""Geometry unit tests init."""
