"""Rational cohomology of symmetric products of a genus-g curve from its presentation.

Generators xi_1..xi_g, xi'_1..xi'_g in degree 1 (mutually anticommuting) and
a central eta in degree 2.  Betti numbers come from exact rank computations
in each degree of the quotient by the relation instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import flint

from .errors import MismatchReport, SizeGuardExceeded

# A generator symbol is ("x", i), ("y", i) for xi'_i, or ("e", 0) for eta.
XI, XIP, ETA = "x", "y", "e"

MAX_G = 3
MAX_N = 3


@dataclass(frozen=True, order=True)
class PresMonomial:
    """+-coeff * xi_S xi'_T eta^c with S, T ascending (xi's first)."""

    S: tuple[int, ...]
    T: tuple[int, ...]
    c: int
    coeff: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return len(self.S) + len(self.T) + 2 * self.c

    @property
    def key(self) -> tuple:
        return (self.S, self.T, self.c)

    def word(self) -> list[tuple[str, int]]:
        return [(XI, i) for i in self.S] + [(XIP, j) for j in self.T] + [(ETA, 0)] * self.c

    def __str__(self):
        parts = [f"x{i}" for i in self.S] + [f"y{j}" for j in self.T]
        if self.c:
            parts.append("e" if self.c == 1 else f"e^{self.c}")
        body = "*".join(parts) or "1"
        return body if self.coeff == 1 else f"{self.coeff}*{body}"


def _rank(sym) -> tuple[int, int]:
    kind, i = sym
    return (0 if kind == XI else 1, i)


def normalize(word: Iterable[tuple[str, int]], coeff=1) -> PresMonomial | None:
    """Normal form of a product of generators; None when it vanishes.

    eta is central; the odd generators are sorted by a bubble sort whose swap
    count gives the sign.  Repeated odd generators square to zero.
    """
    odd, c = [], 0
    for sym in word:
        if sym[0] == ETA:
            c += 1
        elif sym[0] in (XI, XIP):
            odd.append(sym)
        else:
            raise ValueError(f"unknown generator {sym!r}")
    if len(set(odd)) < len(odd):
        return None
    sign = 1
    odd = list(odd)
    for a in range(len(odd)):
        for b in range(len(odd) - 1 - a):
            if _rank(odd[b]) > _rank(odd[b + 1]):
                odd[b], odd[b + 1] = odd[b + 1], odd[b]
                sign = -sign
    S = tuple(i for k, i in odd if k == XI)
    T = tuple(i for k, i in odd if k == XIP)
    return PresMonomial(S, T, c, Fraction(coeff) * sign)


def multiply(a: PresMonomial, b: PresMonomial) -> PresMonomial | None:
    return normalize(a.word() + b.word(), a.coeff * b.coeff)


# An element of the free graded-commutative algebra: {key: Fraction}.
Element = dict


def element(monos: Iterable[PresMonomial | None]) -> Element:
    out: Element = {}
    for m in monos:
        if m is None:
            continue
        out[m.key] = out.get(m.key, 0) + m.coeff
    return {k: v for k, v in out.items() if v}


def element_mul(f: Element, g: Element) -> Element:
    return element(
        multiply(PresMonomial(*k, coeff=a), PresMonomial(*l, coeff=b))
        for k, a in f.items() for l, b in g.items()
    )


@dataclass(frozen=True)
class RelationInstance:
    """xi_I xi'_J prod_{k in K}(xi_k xi'_k - eta) eta^q, with I, J, K disjoint."""

    a: int
    b: int
    c: int
    q: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.a + self.b + 2 * self.c + 2 * self.q

    def expand(self) -> Element:
        f = element([normalize([(XI, i) for i in self.I] + [(XIP, j) for j in self.J]
                               + [(ETA, 0)] * self.q)])
        for k in self.K:
            f = element_mul(f, {((k,), (k,), 0): Fraction(1), ((), (), 1): Fraction(-1)})
        return f

    def __str__(self):
        parts = [f"x{i}" for i in self.I] + [f"y{j}" for j in self.J]
        parts += [f"(x{k}y{k}-e)" for k in self.K]
        if self.q:
            parts.append("e" if self.q == 1 else f"e^{self.q}")
        return "*".join(parts) or "1"


def enumerate_relations(g: int, n: int) -> list[RelationInstance]:
    """All instances with a+b+2c+q = n+1 and mutually distinct indices from 1..g."""
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    idx = range(1, g + 1)
    out = []
    for c in range((n + 1) // 2 + 1):
        for a in range(n + 2 - 2 * c):
            for b in range(n + 2 - 2 * c - a):
                q = n + 1 - a - b - 2 * c
                if a + b + c > g:
                    continue
                for I in combinations(idx, a):
                    rest = [i for i in idx if i not in I]
                    for J in combinations(rest, b):
                        rest2 = [i for i in rest if i not in J]
                        for K in combinations(rest2, c):
                            out.append(RelationInstance(a, b, c, q, I, J, K))
    out.sort(key=lambda r: (r.degree, r.c, r.a, r.b, r.I, r.J, r.K))
    return out


def monomials(g: int, d: int) -> list[tuple]:
    """Normal-form keys of degree d."""
    out = []
    for c in range(d // 2 + 1):
        odd = d - 2 * c
        for s in range(min(odd, g) + 1):
            if odd - s > g:
                continue
            for S in combinations(range(1, g + 1), s):
                for T in combinations(range(1, g + 1), odd - s):
                    out.append((S, T, c))
    return out


def _check_size(g: int, n: int) -> None:
    if g > MAX_G or n > MAX_N:
        raise SizeGuardExceeded(f"betti({g}, {n}) exceeds the size guard g <= {MAX_G}, n <= {MAX_N}")


def ideal_rank(g: int, n: int, d: int, rels=None) -> int:
    """Rank of the degree-d slice of the ideal spanned by relation * monomial."""
    rels = enumerate_relations(g, n) if rels is None else rels
    basis = {k: i for i, k in enumerate(monomials(g, d))}
    rows = []
    for r in rels:
        if r.degree > d:
            continue
        rf = r.expand()
        for key in monomials(g, d - r.degree):
            prod = element_mul(rf, {key: Fraction(1)})
            if prod:
                row = [0] * len(basis)
                for k, v in prod.items():
                    row[basis[k]] = flint.fmpq(v.numerator, v.denominator)
                rows.append(row)
    if not rows or not basis:
        return 0
    return flint.fmpq_mat(len(rows), len(basis), [x for row in rows for x in row]).rank()


def betti(g: int, n: int) -> tuple[int, ...]:
    """Rational Betti numbers b_0..b_{2n} of the quotient."""
    _check_size(g, n)
    rels = enumerate_relations(g, n)
    return tuple(len(monomials(g, d)) - ideal_rank(g, n, d, rels) for d in range(2 * n + 1))


def poincare(g: int, n: int) -> str:
    terms = []
    for d, b in enumerate(betti(g, n)):
        if b:
            terms.append(f"{b}" if d == 0 else f"{b}*s^{d}" if d > 1 else f"{b}*s")
    return " + ".join(terms)


def gen_binom(m: int, k: int) -> int:
    """binom(m, k) for any integer m and k >= 0."""
    out = Fraction(1)
    for i in range(k):
        out = out * (m - i) / (i + 1)
    return int(out)


def euler_characteristic(b: Iterable[int]) -> int:
    return sum((-1) ** k * x for k, x in enumerate(b))


def expected_euler(g: int, n: int) -> int:
    return (-1) ** n * gen_binom(2 * g - 2, n)


@dataclass
class CrossCheck:
    g: int
    n: int
    betti: tuple
    degrees: tuple
    ok: bool


def cross_check_zeta(g: int, n: int, c) -> CrossCheck:
    """Compare betti(g, n) with the degrees of the zeta factors F_0..F_2n."""
    from .zeta import F_k

    if c.g != g:
        raise MismatchReport(f"curve has genus {c.g}, expected {g}")
    b = betti(g, n)
    degs = tuple(max(F_k(c, n, k).degree(), 0) for k in range(2 * n + 1))
    if b != degs:
        raise MismatchReport(f"betti {b} != deg F_k {degs} for g={g}, n={n}")
    return CrossCheck(g, n, b, degs, True)
