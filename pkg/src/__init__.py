"""Exact-arithmetic toolkit for CR invariant polynomials and their global invariants."""

__version__ = "1.0.0"
