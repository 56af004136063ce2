"""Bounds unit tests init."""
