"""Numerical inter-relations between classical random matrix ensembles."""

__version__ = "0.1.0"
