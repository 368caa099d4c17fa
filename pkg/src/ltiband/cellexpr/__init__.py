"""Expression language for spike-train cells."""

from .grammar import CELL_GRAMMAR
from .parser import format_cell, parse_cell

__all__ = [
    "CELL_GRAMMAR",
    "format_cell",
    "parse_cell",
]
