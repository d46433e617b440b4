"""Sparse Laurent polynomials in x_1..x_n over the coefficient field."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..errors import DimensionMismatch, InexactDivision
from .coeff import ONE, ZERO, CoeffElem, coeff

Exp = tuple  # tuple[int, ...]


class XPoly:
    """Immutable sparse Laurent polynomial with CoeffElem coefficients.

    ``terms`` maps exponent tuples of length ``n`` to nonzero coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exp, object] | None = None):
        self.n = int(n)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n:
                raise DimensionMismatch(f"monomial {exp} has length != {self.n}")
            c = coeff(c)
            if c:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def const(cls, n, c):
        c = coeff(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1):
        exp = tuple(int(e) for e in exp)
        c = coeff(c)
        return cls._raw(len(exp), {exp: c} if c else {})

    @classmethod
    def var(cls, n, i):
        """The variable x_i (1-based)."""
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw(n, {tuple(exp): ONE})

    # basic queries ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exp) -> CoeffElem:
        return self.terms.get(tuple(exp), ZERO)

    def leading(self):
        """(exponent, coefficient) of the lex-largest term."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def is_polynomial(self):
        return all(min(e, default=0) >= 0 for e in self.terms)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"XPoly({self.n}, {self.to_latex()})"

    def to_latex(self) -> str:
        from .latex import xpoly_latex

        return xpoly_latex(self)

    # ring operations -------------------------------------------------

    def _check(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(self.n, other)
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} variables vs {other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp)
            if s is None:
                out[exp] = c
            else:
                s = s + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return XPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return self.scale(other)
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return XPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "XPoly":
        c = coeff(c)
        if not c:
            return XPoly.zero(self.n)
        if c.is_one():
            return self
        return XPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def shift(self, exp) -> "XPoly":
        """Multiply by the monomial x^exp."""
        return XPoly._raw(
            self.n, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    def __pow__(self, k):
        out = XPoly.one(self.n)
        for _ in range(int(k)):
            out = out * self
        return out

    # variable actions ------------------------------------------------

    def permute(self, w: Sequence[int]) -> "XPoly":
        """Apply the permutation w (one-line, 1-based): x_i -> x_{w(i)}.

        Composition satisfies ``f.permute(v∘w) == f.permute(w).permute(v)``.
        """
        n = self.n
        if sorted(w) != list(range(1, n + 1)):
            raise DimensionMismatch(f"{w} is not a permutation of 1..{n}")
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, ei in enumerate(e):
                new[w[i] - 1] = ei
            out[tuple(new)] = c
        return XPoly._raw(n, out)

    def swap(self, i: int) -> "XPoly":
        """The simple transposition s_i exchanging x_i and x_{i+1}."""
        a, b = i - 1, i
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return XPoly._raw(self.n, out)

    def substitute(self, images: Sequence[tuple[object, int]]) -> "XPoly":
        """Substitute x_i -> scalar_i * x_{target_i} for every i."""
        n = self.n
        if len(images) != n:
            raise DimensionMismatch(f"need {n} images, got {len(images)}")
        scalars = [coeff(s) for s, _ in images]
        targets = [int(j) for _, j in images]
        if any(not 1 <= j <= n for j in targets):
            raise DimensionMismatch(f"target index outside 1..{n}")
        out: dict = {}
        for e, c in self.terms.items():
            new = [0] * n
            factor = c
            for i, ei in enumerate(e):
                if ei:
                    new[targets[i] - 1] += ei
                    if not scalars[i].is_one():
                        factor = factor * scalars[i] ** ei
            key = tuple(new)
            s = out.get(key)
            out[key] = factor if s is None else s + factor
        return XPoly._raw(n, {e: c for e, c in out.items() if c})

    def specialize(self, uq=None, ut=None) -> "XPoly":
        """Specialize coefficient parameters; None keeps a generator."""
        out = {}
        for e, c in self.terms.items():
            v = c.specialize(uq, ut)
            if v:
                out[e] = v
        return XPoly._raw(self.n, out)

    def map_coefficients(self, fn) -> "XPoly":
        out = {}
        for e, c in self.terms.items():
            v = coeff(fn(c))
            if v:
                out[e] = v
        return XPoly._raw(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    # exact division --------------------------------------------------

    def divide_exact(self, g: "XPoly") -> "XPoly":
        """Return h with self == g*h (Laurent), else raise InexactDivision."""
        g = self._check(g)
        if g.is_zero():
            raise InexactDivision("division by the zero polynomial")
        if self.is_zero():
            return XPoly.zero(self.n)
        n = self.n
        # shift both into honest polynomials; g' has no monomial factor
        fmin = [min(e[i] for e in self.terms) for i in range(n)]
        gmin = [min(e[i] for e in g.terms) for i in range(n)]
        f = self.shift([-m for m in fmin])
        gp = g.shift([-m for m in gmin])
        lead_e, lead_c = gp.leading()
        inv_lead = lead_c.inverse()
        rem = dict(f.terms)
        quot = {}
        while rem:
            e = max(rem)
            d = tuple(a - b for a, b in zip(e, lead_e))
            if min(d) < 0:
                raise InexactDivision("leading term not divisible")
            c = rem[e] * inv_lead
            quot[d] = c
            for ge, gc in gp.terms.items():
                k = tuple(a + b for a, b in zip(ge, d))
                v = rem.get(k, ZERO) - gc * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        h = XPoly._raw(n, quot)
        return h.shift([a - b for a, b in zip(fmin, gmin)])

    __truediv__ = divide_exact


def xpoly_arith(f: XPoly, g: XPoly, op: str) -> XPoly:
    if f.n != g.n:
        raise DimensionMismatch(f"{f.n} variables vs {g.n}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def from_dense(n: int, items: Iterable[tuple[Sequence[int], object]]) -> XPoly:
    """Sum a list of (exponent, coefficient) pairs, merging repeats."""
    out = XPoly.zero(n)
    for exp, c in items:
        out = out + XPoly.monomial(exp, c)
    return out
