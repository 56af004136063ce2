"""Callbacks unit tests init."""
