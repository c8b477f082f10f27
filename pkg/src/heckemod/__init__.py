"""Exact computations with Hecke modifications of vector bundles on curves over finite fields."""

__version__ = "0.1.0"
