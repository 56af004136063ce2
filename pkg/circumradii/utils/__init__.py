"""Utils init."""

from .persistence import (
    load_point_set,
    read_records,
    save_point_set,
    write_records,
)

__all__ = [
    "load_point_set",
    "read_records",
    "save_point_set",
    "write_records",
]
