"""Curves unit tests init."""
