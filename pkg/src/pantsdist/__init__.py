"""Distances in the dual curve and pants complexes for Heegaard diagrams
of closed orientable 3-manifolds."""

__version__ = "0.1.0"
