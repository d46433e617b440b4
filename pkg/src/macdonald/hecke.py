"""Demazure-Lusztig operators and the nonsymmetric / antisymmetric families.

Operators act on XPoly values.  Half powers of t are the generator ``UT``.
The Weyl-character-formula route to P_lambda lives here, as does the
Hall-Littlewood symmetrization.
"""

from __future__ import annotations

import json
import os
import threading
from itertools import permutations
from math import comb
from typing import Sequence

from .errors import InternalNonPolynomial, NotStrictlyDecreasing, InexactDivision
from .qt import ONE, Q, T, UQ, UT, CoeffElem, XPoly, dumps, loads
from .tableaux import partition

Perm = tuple  # one-line notation, 1-based values


# ---------------------------------------------------------------------------
# permutations


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def reduced_words(n: int) -> dict[Perm, tuple[int, ...]]:
    """One reduced word per element of S_n, found by breadth-first search.

    The word ``(i_1, ..., i_l)`` means ``w = s_{i_1} ... s_{i_l}``.
    """
    e = identity(n)
    words = {e: ()}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            lw = len(words[w])
            for i in range(1, n):
                u = compose(simple(n, i), w)
                if u not in words and length(u) == lw + 1:
                    words[u] = (i,) + words[w]
                    nxt.append(u)
        frontier = nxt
    return words


def is_reduced(word: Sequence[int], n: int) -> bool:
    w = identity(n)
    for i in word:
        w = compose(w, simple(n, i))
    return length(w) == len(word)


def act_on_weight(w: Perm, mu: Sequence[int]) -> tuple[int, ...]:
    """(w mu)_{w(i)} = mu_i."""
    out = [0] * len(mu)
    for i, m in enumerate(mu):
        out[w[i] - 1] = m
    return tuple(out)


def min_sorting_perm(mu: Sequence[int]) -> Perm:
    """Shortest v with v·mu weakly increasing (a stable sort)."""
    order = sorted(range(len(mu)), key=lambda i: (mu[i], i))
    v = [0] * len(mu)
    for pos, i in enumerate(order, start=1):
        v[i] = pos
    return tuple(v)


# ---------------------------------------------------------------------------
# operators


def _check_index(f: XPoly, i: int):
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"operator index {i} outside 1..{f.n - 1}")


def apply_partial(f: XPoly, i: int) -> XPoly:
    """Divided difference (f - s_i f) / (x_i - x_{i+1}), computed per monomial."""
    _check_index(f, i)
    a_pos, b_pos = i - 1, i
    out: dict = {}
    for e, c in f.terms.items():
        a, b = e[a_pos], e[b_pos]
        if a == b:
            continue
        # x_i^a x_{i+1}^b - x_i^b x_{i+1}^a over (x_i - x_{i+1})
        lo, d = min(a, b), abs(a - b)
        sign = c if a > b else -c
        base = list(e)
        for k in range(d):
            base[a_pos] = lo + d - 1 - k
            base[b_pos] = lo + k
            key = tuple(base)
            s = out.get(key)
            out[key] = sign if s is None else s + sign
    return XPoly._raw(f.n, {e: c for e, c in out.items() if c})


def _times_var(f: XPoly, j: int) -> XPoly:
    exp = [0] * f.n
    exp[j - 1] = 1
    return f.shift(exp)


_UT_INV = UT.inverse()


def apply_Ti(f: XPoly, i: int) -> XPoly:
    """Demazure-Lusztig operator T_i.

    The symmetrized fraction collapses to
    ``T_i f = t^{-1/2}(d_i(x_i f) - f) - t^{1/2} d_i(x_{i+1} f)`` with d_i the
    divided difference, so no fraction-field arithmetic in x is needed.
    """
    _check_index(f, i)
    return (apply_partial(_times_var(f, i), i) - f).scale(_UT_INV) - apply_partial(
        _times_var(f, i + 1), i
    ).scale(UT)


def apply_Ti_fraction(f: XPoly, i: int) -> XPoly:
    """T_i evaluated literally: one common denominator, then exact division.

    Slower than apply_Ti; kept as an independent route for cross-checks.
    """
    _check_index(f, i)
    n = f.n
    xi, xj = XPoly.var(n, i), XPoly.var(n, i + 1)
    sf = f.swap(i)
    # (t^-1/2 - t^1/2 y)/(1 - y) with y = x_{i+1}/x_i equals
    # (t^-1/2 x_i - t^1/2 x_{i+1}) / (x_i - x_{i+1}); the s_i-image flips signs
    numer = (xi.scale(_UT_INV) - xj.scale(UT)) * f + (xi.scale(UT) - xj.scale(_UT_INV)) * sf
    try:
        frac = numer.divide_exact(xi - xj)
    except InexactDivision as exc:
        raise InternalNonPolynomial(str(exc)) from exc
    return frac - f.scale(_UT_INV)


def apply_T_word(f: XPoly, word: Sequence[int]) -> XPoly:
    """T_{i_1} ... T_{i_l} f (rightmost operator first)."""
    for i in reversed(word):
        f = apply_Ti(f, i)
    return f


# ---------------------------------------------------------------------------
# electronic polynomials E_mu


class EMemo:
    """Cache of E_mu keyed by weight; safe to share between threads."""

    def __init__(self):
        self._cache: dict[tuple[int, ...], XPoly] = {}
        self._lock = threading.Lock()

    def get(self, mu):
        with self._lock:
            return self._cache.get(tuple(mu))

    def put(self, mu, value: XPoly) -> XPoly:
        # first writer wins; all writers compute the same value
        with self._lock:
            return self._cache.setdefault(tuple(mu), value)

    def __len__(self):
        return len(self._cache)

    def __contains__(self, mu):
        return tuple(mu) in self._cache

    def items(self):
        with self._lock:
            return list(self._cache.items())

    def to_json(self) -> str:
        data = {",".join(map(str, mu)): json.loads(dumps(f)) for mu, f in self.items()}
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "EMemo":
        memo = cls()
        for key, obj in json.loads(text).items():
            mu = tuple(int(v) for v in key.split(",")) if key else ()
            memo.put(mu, loads(json.dumps(obj)))
        return memo

    @classmethod
    def load(cls, path) -> "EMemo":
        if path and os.path.exists(path):
            with open(path) as fh:
                return cls.from_json(fh.read())
        return cls()

    def save(self, path):
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            fh.write(self.to_json())
        os.replace(tmp, path)


_DEFAULT_MEMO = None


def _intertwiner_constant(mu: Sequence[int], i: int) -> CoeffElem:
    v = min_sorting_perm(mu)
    m = Q ** (mu[i - 1] - mu[i]) * T ** (v[i - 1] - v[i])
    return (1 - T) * m / (1 - m)


def e_poly(mu: Sequence[int], memo: EMemo | None = None) -> XPoly:
    """Electronic (nonsymmetric) Macdonald polynomial E_mu(q, t).

    Weights with an ascent are reached by the intertwiner from their sorted
    neighbour; weakly decreasing nonzero weights by the affine shift.
    """
    mu = tuple(int(m) for m in mu)
    if any(m < 0 for m in mu):
        raise ValueError(f"weight {mu} has a negative entry")
    if memo is None:
        memo = EMemo()
    return _e_poly(mu, memo)


def _e_poly(nu, memo):
    hit = memo.get(nu)
    if hit is not None:
        return hit
    n = len(nu)
    if not any(nu):
        return memo.put(nu, XPoly.one(n))
    ascent = next((i for i in range(1, n) if nu[i - 1] < nu[i]), None)
    if ascent is not None:
        i = ascent
        mu = list(nu)
        mu[i - 1], mu[i] = mu[i], mu[i - 1]
        mu = tuple(mu)
        e = _e_poly(mu, memo)
        out = (
            apply_partial(_times_var(e, i), i)
            - _times_var(apply_partial(e, i), i).scale(T)
            + e.scale(_intertwiner_constant(mu, i))
        )
    else:
        mu = nu[1:] + (nu[0] - 1,)
        e = _e_poly(mu, memo)
        images = [(ONE, j + 1) for j in range(1, n)] + [(Q.inverse(), 1)]
        out = _times_var(e.substitute(images), 1).scale(Q ** mu[-1])
    return memo.put(nu, out)


# ---------------------------------------------------------------------------
# antisymmetrizations


def _check_strict(mu):
    if any(a <= b for a, b in zip(mu, mu[1:])):
        raise NotStrictlyDecreasing(f"{tuple(mu)} is not strictly decreasing")


def ferm_A(mu: Sequence[int], memo: EMemo | None = None) -> XPoly:
    """Fermionic polynomial: sum over w of (-t^{-1/2})^{l(w)-l(w0)} T_w E_mu."""
    mu = tuple(int(m) for m in mu)
    _check_strict(mu)
    n = len(mu)
    top = comb(n, 2)
    words = reduced_words(n)
    # T_{s_i w} = T_i T_w whenever the length goes up, so build level by level
    images = {identity(n): e_poly(mu, memo)}
    for w, word in sorted(words.items(), key=lambda kv: len(kv[1])):
        if word:
            rest = compose(simple(n, word[0]), w)
            images[w] = apply_Ti(images[rest], word[0])
    minus_ut = -UT
    total = XPoly.zero(n)
    for w, word in words.items():
        total = total + images[w].scale(minus_ut ** (top - len(word)))
    return total


def classical_a(mu: Sequence[int]) -> XPoly:
    """Alternant sum over w of (-1)^{l(w)-l(w0)} w x^mu."""
    mu = tuple(int(m) for m in mu)
    _check_strict(mu)
    n = len(mu)
    top = comb(n, 2)
    terms = {}
    for w in permutations(range(1, n + 1)):
        terms[act_on_weight(w, mu)] = -1 if (length(w) + top) % 2 else 1
    return XPoly(n, terms)


def delta(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _padded(shape, n):
    shape = partition(shape)
    if len(shape) > n:
        raise ValueError(f"partition {shape} has more than {n} parts")
    return shape + (0,) * (n - len(shape))


def wcf_quotient(shape: Sequence[int], n: int, memo: EMemo | None = None) -> XPoly:
    """A_{lambda+delta} / A_delta, i.e. P_lambda(q, q t)."""
    lam = _padded(shape, n)
    memo = EMemo() if memo is None else memo
    d = delta(n)
    top = ferm_A(tuple(a + b for a, b in zip(lam, d)), memo)
    bottom = ferm_A(d, memo)
    return top.divide_exact(bottom)


def wcf_P(shape: Sequence[int], n: int, memo: EMemo | None = None) -> XPoly:
    """P_lambda(q, t) from the Weyl character formula, after t -> t/q."""
    return wcf_quotient(shape, n, memo).specialize(ut=UT / UQ)


def vandermonde(n: int, t=None) -> XPoly:
    """prod_{i<j} (x_i - t x_j); t defaults to 1."""
    out = XPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            xj = XPoly.var(n, j)
            out = out * (XPoly.var(n, i) - (xj if t is None else xj.scale(t)))
    return out


def hall_littlewood(shape: Sequence[int], n: int) -> XPoly:
    """P_lambda(x; t), normalized to be monic in x^lambda."""
    lam = _padded(shape, n)
    kernel = XPoly.monomial(lam) * vandermonde(n, T)
    numer = XPoly.zero(n)
    for w in permutations(range(1, n + 1)):
        # w(prod (x_i - x_j)) = sign(w) prod (x_i - x_j)
        sign = -1 if length(w) % 2 else 1
        numer = numer + kernel.permute(w).scale(sign)
    sym = numer.divide_exact(vandermonde(n))
    lead = sym.coefficient(lam)
    if not lead:
        raise InternalNonPolynomial(f"x^{lam} vanished in the symmetrization")
    return sym.scale(lead.inverse())


def a_delta_factor(n: int, memo: EMemo | None = None):
    """Compare A_delta with prod_{i<j}(x_i - t x_j).

    Returns ``(unit, reversed)`` where ``A_delta == unit * target`` and
    ``reversed`` says the variables had to be reversed; ``None`` if no
    monomial unit relates them.
    """
    a = ferm_A(delta(n), memo)
    target = vandermonde(n, T)
    rev = tuple(range(n, 0, -1))
    for flipped, cand in ((False, target), (True, target.permute(rev))):
        try:
            ratio = a.divide_exact(cand)
        except InexactDivision:
            continue
        if len(ratio) == 1 and not any(next(iter(ratio.terms))):
            unit = ratio.coefficient((0,) * n)
            return unit, flipped
    return None
