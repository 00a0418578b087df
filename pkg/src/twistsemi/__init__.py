"""Twisted group rings, semilinear automorphism groups, and exhaustive checks of their adjunction."""
__version__ = "0.1.0"
