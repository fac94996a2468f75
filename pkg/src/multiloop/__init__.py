"""Exact arithmetic for multiloop Lie algebras, Lie tori, relative root
elements, and finite-level cocycle checks."""

__version__ = "0.1.0"
