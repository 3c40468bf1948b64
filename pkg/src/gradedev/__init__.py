"""Deviations, Betti numbers and Poincaré series of monomial quotient rings."""

__version__ = "0.1.0"
