"""Exact Rauzy induction, zippered rectangles, and slow-divergence data."""

from fractions import Fraction

try:
    from ._core import *  # noqa: F401,F403
    from ._core import ConfigError, InvariantError  # noqa: F401
except ImportError:  # in-tree builds put _core next to the package
    from _core import *  # noqa: F401,F403
    from _core import ConfigError, InvariantError  # noqa: F401


def as_fraction(text):
    """Parse a canonical "p/q" string into a Fraction."""
    return Fraction(text)


def as_fractions(seq):
    """Parse a sequence of "p/q" strings into Fractions."""
    return [Fraction(s) for s in seq]
