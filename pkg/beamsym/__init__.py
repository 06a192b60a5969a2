"""Symmetry verification and numerical cross-checks for axially loaded beams."""

__version__ = "1.0.0"
