"""Exact computations with monomial ideals: integral closures, depth, Stanley depth."""

from .core import MonomialIdeal, ideal, parse_ideal, format_ideal

__all__ = ["MonomialIdeal", "ideal", "parse_ideal", "format_ideal"]
__version__ = "0.1.0"
