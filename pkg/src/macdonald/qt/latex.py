"""LaTeX rendering for coefficients and x-polynomials."""

from __future__ import annotations

from fractions import Fraction

from .coeff import poly_terms


def _param_power(name: str, e: int) -> str:
    # e counts half powers
    if e == 0:
        return ""
    if e % 2 == 0:
        k = e // 2
        return name if k == 1 else f"{name}^{{{k}}}"
    return f"{name}^{{{e}/2}}"


def _rat_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def param_poly_latex(terms) -> str:
    """Render ``[((e_uq, e_ut), c), ...]`` in ascending lex order."""
    if not terms:
        return "0"
    out = []
    for (a, b), c in sorted(terms):
        mono = _param_power("q", a) + _param_power("t", b)
        if not mono:
            s = _rat_latex(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = _rat_latex(c) + mono
        if out and not s.startswith("-"):
            s = "+" + s
        out.append(s)
    return "".join(out)


def coeff_latex(c) -> str:
    num, den = c.num_terms(), c.den_terms()
    if len(den) == 1 and den[0] == ((0, 0), 1):
        return param_poly_latex(num)
    # display convention: the lowest denominator term is positive
    if min(den)[1] < 0:
        num = [(m, -v) for m, v in num]
        den = [(m, -v) for m, v in den]
    return f"\\frac{{{param_poly_latex(num)}}}{{{param_poly_latex(den)}}}"


def _x_monomial(exp) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 0:
            continue
        parts.append(f"x_{i}" if e == 1 else f"x_{i}^{{{e}}}")
    return "".join(parts)


def xpoly_latex(f) -> str:
    """Terms in ascending lex order of exponent vectors."""
    if not f.terms:
        return "0"
    pieces = []
    for exp in sorted(f.terms):
        c = f.terms[exp]
        mono = _x_monomial(exp)
        if c.is_polynomial() and len(c.num_terms()) == 1:
            (m, v), = c.num_terms()
            if m == (0, 0) and mono:
                s = mono if v == 1 else ("-" + mono if v == -1 else _rat_latex(v) + mono)
            else:
                s = coeff_latex(c) + mono
        elif c.is_polynomial():
            s = f"({coeff_latex(c)}){mono}" if mono else coeff_latex(c)
        else:
            s = coeff_latex(c) + mono
        pieces.append(s)
    out = pieces[0]
    for s in pieces[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out
