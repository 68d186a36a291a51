"""Operator-algebra laboratory for the local quantum Ising model on a
discrete two-dimensional Minkowski lattice."""

__version__ = "0.1.0"
