"""Exact computation of Lie algebra invariants through virtual Levi copies."""

__version__ = "0.1.0"
