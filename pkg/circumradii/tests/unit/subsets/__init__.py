"""Subsets unit tests init."""
