"""Exact computations around Macdonald polynomials, affine root systems,
Clifford's chain of lines and circles, and symmetric products of curves."""

__version__ = "0.1.0"
