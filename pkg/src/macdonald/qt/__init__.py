"""Coefficient field and Laurent polynomial ring."""

from .coeff import ONE, Q, T, UQ, UT, ZERO, CoeffElem, coeff, param_poly, poly_terms
from .serialize import dumps, loads, xpoly_from_obj, xpoly_to_obj
from .xpoly import XPoly, xpoly_arith

__all__ = [
    "CoeffElem", "XPoly", "ONE", "ZERO", "Q", "T", "UQ", "UT",
    "coeff", "param_poly", "poly_terms", "xpoly_arith",
    "dumps", "loads", "xpoly_to_obj", "xpoly_from_obj",
]
