"""Exact coefficient field Q(q^(1/2), t^(1/2)).

Elements are reduced ratios of polynomials in two generators ``uq`` and
``ut`` with ``q = uq**2`` and ``t = ut**2``.  Polynomials are python-flint
``fmpq_mpoly`` objects in lex order with ``uq > ut``; the denominator is
normalized so that its lex-leading coefficient is 1.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

from ..errors import DivisionByZero, SpecializationPole

CTX = flint.fmpq_mpoly_ctx.get(("uq", "ut"), "lex")
_UQ, _UT = CTX.gens()
_P_ZERO = CTX.from_dict({})
_P_ONE = CTX.from_dict({(0, 0): 1})


def param_poly(terms) -> flint.fmpq_mpoly:
    """Build a parameter polynomial from ``{(e_uq, e_ut): rational}``."""
    clean = {}
    for (a, b), c in dict(terms).items():
        if a < 0 or b < 0:
            raise ValueError("parameter exponents must be nonnegative")
        c = _to_fmpq(c)
        if c != 0:
            clean[(int(a), int(b))] = c
    return CTX.from_dict(clean)


def poly_terms(p: flint.fmpq_mpoly) -> list[tuple[tuple[int, int], Fraction]]:
    """Terms of ``p`` in descending lex order, coefficients as Fractions."""
    return [
        ((int(m[0]), int(m[1])), Fraction(int(c.p), int(c.q)))
        for m, c in zip(p.monoms(), p.coeffs())
    ]


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, (int, flint.fmpz)):
        return flint.fmpq(int(c))
    if isinstance(c, Rational):
        return flint.fmpq(int(c.numerator), int(c.denominator))
    if isinstance(c, str):
        f = Fraction(c)
        return flint.fmpq(f.numerator, f.denominator)
    raise TypeError(f"cannot use {type(c).__name__} as an exact rational")


class CoeffElem:
    """Element of Q(uq, ut) held as a canonical reduced fraction."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _reduced=False):
        num = _as_poly(num)
        den = _P_ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors ----------------------------------------------------

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, num_terms, den_terms=None) -> "CoeffElem":
        den = _P_ONE if den_terms is None else param_poly(den_terms)
        return cls(param_poly(num_terms), den)

    # predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return CoeffElem._raw(self.num + other.num, _P_ONE)
            return CoeffElem(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            return CoeffElem(num, self.den * other.den)
        d1 = self.den / g
        d2 = other.den / g
        return CoeffElem(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CoeffElem._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return CoeffElem._raw(self.num * other.num, _P_ONE)
        # cross cancellation keeps the gcds small
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = a.gcd(d)
        if not g1.is_one():
            a = a / g1
            d = d / g1
        g2 = c.gcd(b)
        if not g2.is_one():
            c = c / g2
            b = b / g2
        return CoeffElem._raw(*_normalize_den(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "CoeffElem":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return CoeffElem._raw(*_normalize_den(self.den, self.num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise DivisionByZero("division by zero in Q(q^1/2, t^1/2)")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        return CoeffElem._raw(self.num**k, self.den**k)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(poly_terms(self.num)), tuple(poly_terms(self.den))))
        return self._hash

    # evaluation ------------------------------------------------------

    def specialize(self, uq=None, ut=None) -> "CoeffElem":
        """Substitute ``uq -> uq_val`` and/or ``ut -> ut_val``.

        ``None`` keeps the generator.  Raises SpecializationPole when the
        denominator vanishes under the substitution.
        """
        if uq is None and ut is None:
            return self
        A = UQ if uq is None else _coerce(uq)
        C = UT if ut is None else _coerce(ut)
        n_num, n_scale = _eval_homogenized(self.num, A, C)
        d_num, d_scale = _eval_homogenized(self.den, A, C)
        if d_num.is_zero():
            raise SpecializationPole(f"denominator {self.den} vanishes")
        # value = (n_num / n_scale) / (d_num / d_scale)
        return CoeffElem(n_num * d_scale, d_num * n_scale)

    def evaluate(self, q_half, t_half):
        """Numeric value at uq = q_half, ut = t_half (any field supporting +,*,/)."""
        return _eval_numeric(self.num, q_half, t_half) / _eval_numeric(self.den, q_half, t_half)

    # display ---------------------------------------------------------

    def num_terms(self):
        return poly_terms(self.num)

    def den_terms(self):
        return poly_terms(self.den)

    def __repr__(self):
        if self.den.is_one():
            return f"CoeffElem({self.num})"
        return f"CoeffElem(({self.num})/({self.den}))"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_latex(self) -> str:
        from .latex import coeff_latex

        return coeff_latex(self)


def _as_poly(x) -> flint.fmpq_mpoly:
    if isinstance(x, flint.fmpq_mpoly):
        return x
    return CTX.from_dict({(0, 0): _to_fmpq(x)}) if x != 0 else _P_ZERO


def _coerce(x):
    if isinstance(x, CoeffElem):
        return x
    if isinstance(x, (int, Rational, flint.fmpq, flint.fmpz)):
        return CoeffElem._raw(_as_poly(x), _P_ONE)
    if isinstance(x, flint.fmpq_mpoly):
        return CoeffElem._raw(x, _P_ONE)
    return NotImplemented


def _normalize_den(num, den):
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def _reduce(num, den):
    if num.is_zero():
        return _P_ZERO, _P_ONE
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    return _normalize_den(num, den)


def _eval_homogenized(p, A: CoeffElem, C: CoeffElem):
    """Return (N, S) with p(A, C) = N / S, both parameter polynomials."""
    if p.is_zero():
        return _P_ZERO, _P_ONE
    dq, dt = p.degrees()
    dq, dt = int(dq), int(dt)
    a1, a2, c1, c2 = A.num, A.den, C.num, C.den
    pa1 = _powers(a1, dq)
    pa2 = _powers(a2, dq)
    pc1 = _powers(c1, dt)
    pc2 = _powers(c2, dt)
    total = _P_ZERO
    for (i, j), c in zip(p.monoms(), p.coeffs()):
        i, j = int(i), int(j)
        total += c * pa1[i] * pa2[dq - i] * pc1[j] * pc2[dt - j]
    return total, pa2[dq] * pc2[dt]


def _powers(p, k):
    out = [_P_ONE]
    for _ in range(k):
        out.append(out[-1] * p)
    return out


def _eval_numeric(p, x, y):
    total = 0
    for (i, j), c in zip(p.monoms(), p.coeffs()):
        total += Fraction(int(c.p), int(c.q)) * x ** int(i) * y ** int(j)
    return total


ZERO = CoeffElem._raw(_P_ZERO, _P_ONE)
ONE = CoeffElem._raw(_P_ONE, _P_ONE)
UQ = CoeffElem._raw(_UQ, _P_ONE)
UT = CoeffElem._raw(_UT, _P_ONE)
Q = CoeffElem._raw(_UQ**2, _P_ONE)
T = CoeffElem._raw(_UT**2, _P_ONE)


def coeff(x) -> CoeffElem:
    """Coerce an int, Fraction or CoeffElem into the coefficient field."""
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to CoeffElem")
    return c
