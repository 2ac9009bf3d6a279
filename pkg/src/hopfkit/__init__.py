"""Exact computations with finite-dimensional quasitriangular Hopf algebras."""

__version__ = "0.1.0"
