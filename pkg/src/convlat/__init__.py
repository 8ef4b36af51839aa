"""Exact-rational laboratory for lattices of convex sets."""

__version__ = "0.1.0"
