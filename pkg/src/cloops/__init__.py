"""Finite loops: identities, translation sets, autotopisms and isotopes."""

from .core import LoopTable, Perm, Side, format_table, load_table, parse_table, validate_table
from .autotopy import Triple

__all__ = [
    "LoopTable",
    "Perm",
    "Side",
    "Triple",
    "format_table",
    "load_table",
    "parse_table",
    "validate_table",
]
