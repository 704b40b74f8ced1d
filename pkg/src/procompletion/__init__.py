"""Exact arithmetic for the pronilpotent and pro-p completions of free groups."""

__version__ = "1.0.0"
