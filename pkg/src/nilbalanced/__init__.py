"""Balanced Hermitian geometry on six-dimensional Lie algebras."""

__version__ = "0.1.0"
