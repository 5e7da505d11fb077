"""Totally real theta characteristic counts, plane-quartic bitangents,
convex-hull edge certification, and common supporting hyperplanes of
strongly separated convex bodies."""

__version__ = "0.1.0"
