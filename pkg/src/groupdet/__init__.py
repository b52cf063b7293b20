"""Exact group determinants and their factorizations for abelian, dihedral and quaternion groups."""

__version__ = "0.1.0"
