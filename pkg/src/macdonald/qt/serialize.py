"""Canonical JSON form of XPoly.

Layout::

    {"n": 2, "terms": [{"exp": [1, 0], "num": [[0, 0, "1"], [0, 2, "-1"]],
                        "den": [[0, 0, "1"], [2, 2, "-1"]]}]}

Terms are sorted by exponent vector (descending lex), parameter terms by
``(e_uq, e_ut)`` (descending lex), rationals written as ``"p"`` or ``"p/q"``.
Serializing the parsed value reproduces the input text byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .coeff import CoeffElem, param_poly, poly_terms
from .xpoly import XPoly


def _rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _pp(p) -> list:
    return [[a, b, _rat(c)] for (a, b), c in poly_terms(p)]


def xpoly_to_obj(f: XPoly) -> dict:
    terms = []
    for exp in sorted(f.terms, reverse=True):
        c = f.terms[exp]
        terms.append({"exp": list(exp), "num": _pp(c.num), "den": _pp(c.den)})
    return {"n": f.n, "terms": terms}


def xpoly_from_obj(obj: dict) -> XPoly:
    n = int(obj["n"])
    out = {}
    for t in obj["terms"]:
        num = param_poly({(a, b): Fraction(r) for a, b, r in t["num"]})
        den = param_poly({(a, b): Fraction(r) for a, b, r in t["den"]})
        out[tuple(t["exp"])] = CoeffElem(num, den)
    return XPoly(n, out)


def dumps(f: XPoly) -> str:
    return json.dumps(xpoly_to_obj(f), separators=(",", ":"))


def loads(text: str) -> XPoly:
    return xpoly_from_obj(json.loads(text))
