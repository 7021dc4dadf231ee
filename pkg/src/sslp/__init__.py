"""Exact subset-sum linear-programming search for distance-2 codes with transversal diagonal gates."""

__version__ = "0.1.0"
