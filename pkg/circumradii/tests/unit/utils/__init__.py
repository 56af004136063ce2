"""Utils unit tests init."""
