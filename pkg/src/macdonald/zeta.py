"""Zeta functions of symmetric products of a curve over F_q.

Frobenius eigenvalues are never extracted: every exterior-power polynomial
is assembled from power sums with Newton's identities over the rationals.
Polynomials in t are python-flint ``fmpq_poly`` values.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

import flint
import numpy as np

from .errors import BadNumerator, InternalMismatch, RHViolation

log = logging.getLogger(__name__)

IntPolyT = flint.fmpq_poly

ONE_T = flint.fmpq_poly([1])


@dataclass(frozen=True)
class CurveZeta:
    """Z_1(t) = numer(t) / ((1 - t)(1 - q t)), numer = prod (1 - rho_i t)."""

    q: int
    g: int
    numer: tuple[int, ...]

    @property
    def numerator(self) -> IntPolyT:
        return flint.fmpq_poly(list(self.numer))


def curve_from_numerator(q: int, coeffs) -> CurveZeta:
    coeffs = tuple(int(c) for c in coeffs)
    if q < 2:
        raise BadNumerator(f"q must be at least 2, got {q}")
    if not coeffs or coeffs[0] != 1:
        raise BadNumerator("numerator must have constant term 1")
    if (len(coeffs) - 1) % 2:
        raise BadNumerator(f"numerator degree {len(coeffs) - 1} is odd")
    g = (len(coeffs) - 1) // 2
    if g and coeffs[-1] != q**g:
        log.warning("leading coefficient %s != q^g = %s; not a curve numerator", coeffs[-1], q**g)
    c = CurveZeta(q, g, coeffs)
    p1 = power_sums(c, 1)[1]
    # Weil bound |p_1| <= 2g sqrt(q), compared without square roots
    if p1 * p1 > 4 * g * g * q:
        log.warning("Weil bound violated: p_1 = %s, 2g sqrt(q) = %.6g", p1, 2 * g * q**0.5)
    return c


# ---------------------------------------------------------------------------
# Newton identities


def power_sums_from_elementary(e: list, count: int) -> list:
    """p_0..p_count from e_0=1, e_1, ... (missing e_i are zero)."""
    p = [Fraction(len(e) - 1)] + [Fraction(0)] * count
    for m in range(1, count + 1):
        s = Fraction(0)
        for i in range(1, m):
            if i < len(e):
                s += (-1) ** (i - 1) * e[i] * p[m - i]
        if m < len(e):
            s += (-1) ** (m - 1) * m * e[m]
        p[m] = s
    return p


def elementary_from_power_sums(p: list, count: int) -> list:
    """e_0..e_count from p_1..p_count."""
    e = [Fraction(1)] + [Fraction(0)] * count
    for m in range(1, count + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            s += (-1) ** (i - 1) * e[m - i] * p[i]
        e[m] = s / m
    return e


def _fq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _tpoly(coeffs) -> IntPolyT:
    return flint.fmpq_poly([_fq(v) for v in coeffs])


def _coeff_list(poly: IntPolyT) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in poly.coeffs()]


def reciprocal_root_power_sums(poly: IntPolyT, count: int) -> list:
    """For poly = prod (1 - a_i t): the power sums sum a_i^m, m = 0..count."""
    cs = _coeff_list(poly)
    if not cs or cs[0] != 1:
        raise ValueError("expected constant term 1")
    e = [(-1) ** k * c for k, c in enumerate(cs)]
    return power_sums_from_elementary(e, count)


def poly_from_power_sums(p: list, degree: int) -> IntPolyT:
    """prod_{i=1..degree} (1 - a_i t) from the power sums of the a_i."""
    e = elementary_from_power_sums(p, degree)
    return _tpoly([(-1) ** k * e[k] for k in range(degree + 1)])


def power_sums(c: CurveZeta, count: int) -> list:
    """p_m(rho) = sum rho_i^m for m = 0..count, as Fractions."""
    return reciprocal_root_power_sums(c.numerator, count)


def scale_arg(poly: IntPolyT, factor) -> IntPolyT:
    """poly(factor * t)."""
    return poly.__class__([c * _fq(factor) ** k for k, c in enumerate(poly.coeffs())])


# ---------------------------------------------------------------------------
# exterior powers and the factors F_k


def phi_k(c: CurveZeta, k: int) -> IntPolyT:
    """prod over k-subsets S of (1 - rho_S t); phi_0 = 1 - t, 1 beyond 2g."""
    if k == 0:
        return flint.fmpq_poly([1, -1])
    if k < 0 or k > 2 * c.g:
        return ONE_T
    deg = comb(2 * c.g, k)
    p = power_sums(c, deg * k)
    # m-th power sum of the rho_S is e_k(rho_1^m, ..., rho_2g^m)
    big = [Fraction(deg)]
    for m in range(1, deg + 1):
        pm = [Fraction(2 * c.g)] + [p[j * m] for j in range(1, k + 1)]
        big.append(elementary_from_power_sums(pm, k)[k])
    return poly_from_power_sums(big, deg)


def F_k(c: CurveZeta, n: int, k: int) -> IntPolyT:
    """Factor of Z_n in cohomological degree k.

    For k <= n this is prod_j phi_{k-2j}(q^j t); the twist by q^j records
    the weight of eta^j.  Above n the reflection F_{2n-k}(q^{k-n} t) applies.
    """
    if not 0 <= k <= 2 * n:
        raise ValueError(f"k={k} outside 0..{2 * n}")
    if k > n:
        return scale_arg(F_k(c, n, 2 * n - k), c.q ** (k - n))
    out = ONE_T
    for j in range(k // 2 + 1):
        out = out * scale_arg(phi_k(c, k - 2 * j), c.q**j)
    return out


def F_k_untwisted(c: CurveZeta, n: int, k: int) -> IntPolyT:
    """phi_k phi_{k-2} ... with no twist, reflected the same way above n.

    Kept for comparison; it does not reproduce the point counts.
    """
    if k > n:
        return scale_arg(F_k_untwisted(c, n, 2 * n - k), c.q ** (k - n))
    out = ONE_T
    for j in range(k // 2 + 1):
        out = out * phi_k(c, k - 2 * j)
    return out


@dataclass
class ZSymFactored:
    n: int
    numer: list = field(default_factory=list)  # F_1, F_3, ..., F_{2n-1}
    denom: list = field(default_factory=list)  # F_0, F_2, ..., F_{2n}

    def expand(self) -> tuple[IntPolyT, IntPolyT]:
        num, den = ONE_T, ONE_T
        for f in self.numer:
            num = num * f
        for f in self.denom:
            den = den * f
        return num, den

    def series(self, order: int) -> list[Fraction]:
        """Taylor coefficients z_0..z_order."""
        num, den = self.expand()
        return series_quotient(num, den, order)

    def value(self, t) -> object:
        num, den = self.expand()
        return _peval(num, t) / _peval(den, t)


def _peval(poly, t):
    out = 0
    for coef in reversed(_coeff_list(poly)):
        out = out * t + coef
    return out


def series_quotient(num: IntPolyT, den: IntPolyT, order: int) -> list[Fraction]:
    a = _coeff_list(num)
    b = _coeff_list(den)
    if b[0] == 0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    out = []
    for m in range(order + 1):
        s = a[m] if m < len(a) else Fraction(0)
        for i in range(1, min(m, len(b) - 1) + 1):
            s -= b[i] * out[m - i]
        out.append(s / b[0])
    return out


def z_sym(c: CurveZeta, n: int, factor=F_k) -> ZSymFactored:
    if n < 1:
        raise ValueError("n must be positive")
    fs = [factor(c, n, k) for k in range(2 * n + 1)]
    return ZSymFactored(n, fs[1::2], fs[0::2])


# ---------------------------------------------------------------------------
# point counts


def log_derivative_counts(z: ZSymFactored, m_max: int) -> list[int]:
    """N_1..N_{m_max} from t Z'/Z = sum N_m t^m, via the series of Z."""
    zs = z.series(m_max)
    counts = []
    for m in range(1, m_max + 1):
        s = m * zs[m] - sum(counts[k - 1] * zs[m - k] for k in range(1, m))
        counts.append(s)
    return counts


def base_change(c: CurveZeta, m: int) -> CurveZeta:
    """The same curve over F_{q^m}: reciprocal roots rho_i^m."""
    p = power_sums(c, 2 * c.g * m)
    pm = [Fraction(2 * c.g)] + [p[j * m] for j in range(1, 2 * c.g + 1)]
    poly = poly_from_power_sums(pm, 2 * c.g)
    return CurveZeta(c.q**m, c.g, tuple(int(v) for v in _coeff_list(poly)) or (1,))


def count_points_sym(c: CurveZeta, n: int, m: int) -> int:
    """Card of Sigma(n) over F_{q^m}, by two independent routes.

    (i) coefficient of t^{m-1} in the log derivative of the factored Z_n;
    (ii) degree-n effective divisors: coefficient of t^n in Z_1 over F_{q^m}.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    route1 = log_derivative_counts(z_sym(c, n), m)[m - 1]
    cm = base_change(c, m)
    z1 = series_quotient(cm.numerator, flint.fmpq_poly([1, -1]) * flint.fmpq_poly([1, -cm.q]), n)
    route2 = z1[n]
    if route1 != route2:
        raise InternalMismatch(f"Sigma({n}) over F_(q^{m}): log-derivative {route1} vs divisors {route2}")
    if route1.denominator != 1:
        raise InternalMismatch(f"non-integral point count {route1}")
    return int(route1)


# ---------------------------------------------------------------------------
# functional equation


def euler_exponent(g: int, n: int) -> int:
    """(-1)^n binom(2g-2, n), with binom(m, n) = 0 for 0 <= m < n."""
    m = 2 * g - 2
    if m < 0:
        raise ValueError("exponent undefined for genus 0")
    return (-1) ** n * comb(m, n)


@dataclass
class FunctionalEquationReport:
    n: int
    exponent: int
    ok: bool
    lhs: tuple  # (num, den) of Z_n(1/(q^n t)), cleared of negative powers
    rhs: tuple
    note: str = ""


def _reflect(poly: IntPolyT, qn: int, extra_deg: int) -> IntPolyT:
    """t^extra_deg * poly(1/(qn t)) as a polynomial (extra_deg >= deg poly)."""
    cs = _coeff_list(poly)
    out = [Fraction(0)] * (extra_deg + 1)
    for k, a in enumerate(cs):
        out[extra_deg - k] += a / Fraction(qn) ** k
    return _tpoly(out)


def functional_eq_check(c: CurveZeta, n: int, q_sign: int = -1) -> FunctionalEquationReport:
    """Check Z_n(1/(q^n t)) == (-q^{q_sign*n/2} t)^e Z_n(t) exactly.

    ``q_sign=-1`` is the displayed form; ``+1`` the alternative with
    q^{+n/2}.  With q^{1/2} = uq the prefactor is rational unless n*e is odd;
    then it lies in Q(uq) \\ Q and the identity is checked after squaring
    out the irrational part (only possible when q is a perfect square).
    """
    e = euler_exponent(c.g, n)
    num, den = z_sym(c, n).expand()
    qn = c.q**n
    D = max(num.degree(), den.degree(), 0)
    # Z_n(1/(q^n t)) = [t^D num(1/(q^n t))] / [t^D den(1/(q^n t))]
    lnum, lden = _reflect(num, qn, D), _reflect(den, qn, D)
    half = q_sign * n * e  # exponent of uq in the prefactor
    note = ""
    if half % 2:
        r = isqrt(c.q)
        if r * r != c.q:
            return FunctionalEquationReport(n, e, False, (lnum, lden), (num, den),
                                            "prefactor needs an odd power of q^(1/2)")
        scal = Fraction(r) ** half
        note = "q is a perfect square"
    else:
        scal = Fraction(c.q) ** (half // 2)
    scal *= (-1) ** (e % 2)
    # rhs = scal * t^e * num / den; compare lnum * den * t^{max(0,-e)} with ...
    rnum, rden = num * _fq(scal), den
    if e >= 0:
        rnum = rnum * flint.fmpq_poly([0] * e + [1])
    else:
        rden = rden * flint.fmpq_poly([0] * (-e) + [1])
    ok = lnum * rden == rnum * lden
    return FunctionalEquationReport(n, e, ok, (lnum, lden), (rnum, rden), note)


# ---------------------------------------------------------------------------
# Riemann hypothesis


@dataclass
class RHReport:
    """Root magnitudes per factor.  Floating point, tolerance-based."""

    n: int
    q: int
    tol: float
    factors: dict  # k -> list of (|root|, j) with |root| ~ q^{-j/2}
    ok: bool
    worst: float


def numeric_roots(poly: IntPolyT) -> np.ndarray:
    """Roots with multiplicity, isolated by flint's certified root finder.

    Plain companion-matrix roots lose half their digits on the repeated
    roots that symmetric powers routinely produce, hence the detour.
    """
    if poly.degree() < 1:
        return np.array([], dtype=complex)
    num = flint.fmpz_poly([int(c) for c in (poly * poly.denom()).coeffs()])
    out = []
    for r, mult in num.complex_roots():
        z = complex(float(r.real.mid()), float(r.imag.mid()))
        out.extend([z] * mult)
    return np.array(out, dtype=complex)


def rh_check(c: CurveZeta, n: int, tol: float = 1e-9, strict: bool = True) -> RHReport:
    """Every root of every F_k must have modulus q^{-j/2}, j in 0..2n.

    Purity predicts j = k for the roots of F_k; the report records the
    matched j per root.  Raises RHViolation when ``strict`` and a root misses.
    """
    factors, ok, worst = {}, True, 0.0
    for k in range(2 * n + 1):
        got = []
        for r in numeric_roots(F_k(c, n, k)):
            mod = abs(r)
            j = round(-2 * np.log(mod) / np.log(c.q))
            target = c.q ** (-j / 2)
            rel = abs(mod - target) / target
            worst = max(worst, rel)
            if not (0 <= j <= 2 * n) or rel > tol:
                ok = False
                if strict:
                    raise RHViolation(f"F_{k} root {r} has modulus {mod}")
            got.append((mod, j))
        factors[k] = got
    return RHReport(n, c.q, tol, factors, ok, worst)
