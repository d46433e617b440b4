"""Clifford's chain for the n-line, in exact Gaussian-rational arithmetic.

Line i is the perpendicular bisector of 0 and y_i, written
``conj(z) = t_i (z - y_i)`` with ``t_i = -conj(y_i) / y_i``.  Even n gives a
Clifford point, odd n a Clifford circle.  The closed forms use Hankel
matrices of the coefficients c_k; ``constructive_clifford`` rebuilds the
same objects from pairwise intersections and circumcircles only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import GenericityViolation, SingularHankel, ZeroPoint


@dataclass(frozen=True)
class GaussianRat:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, x) -> "GaussianRat":
        if isinstance(x, GaussianRat):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, tuple):
            return cls(Fraction(x[0]), Fraction(x[1]))
        return cls(Fraction(x))

    def __add__(self, o):
        o = GaussianRat.of(o)
        return GaussianRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRat(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussianRat.of(o))

    def __rsub__(self, o):
        return GaussianRat.of(o) - self

    def __mul__(self, o):
        o = GaussianRat.of(o)
        return GaussianRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianRat":
        return GaussianRat(self.re, -self.im)

    def __truediv__(self, o):
        o = GaussianRat.of(o)
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conj()
        return GaussianRat(p.re / d, p.im / d)

    def __rtruediv__(self, o):
        return GaussianRat.of(o) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRat(1) / self ** (-k)
        out = GaussianRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


ZERO = GaussianRat(0)
ONE = GaussianRat(1)


@dataclass(frozen=True)
class ExactCircle:
    center: GaussianRat
    radius_sq: Fraction

    def __post_init__(self):
        if self.radius_sq < 0:
            raise ValueError("negative squared radius")


def on_circle(p: GaussianRat, c: ExactCircle) -> bool:
    return (p - c.center).norm() == c.radius_sq


@dataclass(frozen=True)
class NLineConfig:
    ys: tuple
    ts: tuple

    @property
    def n(self):
        return len(self.ys)

    def subset(self, keep: Sequence[int]) -> "NLineConfig":
        return NLineConfig(tuple(self.ys[i] for i in keep), tuple(self.ts[i] for i in keep))


def nline_new(ys) -> NLineConfig:
    ys = tuple(GaussianRat.of(y) for y in ys)
    for y in ys:
        if y.is_zero():
            raise ZeroPoint("y_i must be nonzero")
    ts = tuple(-y.conj() / y for y in ys)
    if len(set(ts)) != len(ts):
        raise GenericityViolation("two lines are parallel (equal t_i)")
    return NLineConfig(ys, ts)


def parse_points(text: str) -> list[GaussianRat]:
    """``"2,0;0,2"`` -> [2, 2i]; components may be fractions like ``1/2``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        re_, im_ = (part.strip() for part in chunk.split(","))
        out.append(GaussianRat(Fraction(re_), Fraction(im_)))
    return out


def _g(L: NLineConfig, j: int) -> GaussianRat:
    out = ONE
    for m, tm in enumerate(L.ts):
        if m != j:
            out = out * (L.ts[j] - tm)
    if out.is_zero():
        raise GenericityViolation("t_i not pairwise distinct")
    return out


def c_coeff(L: NLineConfig, k: int) -> GaussianRat:
    """c_k = sum_j y_j t_j^{n-1-k} / g_j, for any k >= 0."""
    n = L.n
    total = ZERO
    for j in range(n):
        total = total + L.ys[j] * L.ts[j] ** (n - 1 - k) / _g(L, j)
    return total


def det(mat) -> GaussianRat:
    """Determinant by fraction-exact Gaussian elimination; det([]) = 1."""
    m = [list(row) for row in mat]
    size = len(m)
    out = ONE
    for col in range(size):
        piv = next((r for r in range(col, size) if not m[r][col].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            out = -out
        out = out * m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            if not f.is_zero():
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return out


def solve(mat, rhs) -> list[GaussianRat]:
    size = len(mat)
    m = [list(row) + [b] for row, b in zip(mat, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not m[r][col].is_zero()), None)
        if piv is None:
            raise SingularHankel("singular Hankel system")
        m[col], m[piv] = m[piv], m[col]
        for r in range(size):
            if r != col and not m[r][col].is_zero():
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][size] / m[i][i] for i in range(size)]


def _hankel(cs, first: int, size: int):
    return [[cs[first + i + j] for j in range(size)] for i in range(size)]


def clifford_point_even(L: NLineConfig) -> GaussianRat:
    n = L.n
    if n % 2 or n < 2:
        raise ValueError(f"even case needs even n >= 2, got {n}")
    k = n // 2
    cs = [c_coeff(L, j) for j in range(2 * k - 1)]
    # rows (c_{i+1} .. c_{i+k-1}) for i = 1..k-1, right side -c_i
    mat = _hankel(cs, 2, k - 1)
    a = solve(mat, [-cs[i] for i in range(1, k)])
    p = cs[0]
    for j, aj in enumerate(a, start=1):
        p = p + aj * cs[j]
    return p


def clifford_circle_odd(L: NLineConfig) -> tuple[GaussianRat, GaussianRat]:
    """(A, B) with the Clifford circle {A - theta B : |theta| = 1}."""
    n = L.n
    if n % 2 == 0:
        raise ValueError(f"odd case needs odd n, got {n}")
    k = (n - 1) // 2
    cs = [c_coeff(L, j) for j in range(2 * k)]
    den = det(_hankel(cs, 2, k - 1))
    if den.is_zero():
        raise SingularHankel("denominator Hankel determinant vanishes")
    A = det(_hankel(cs, 0, k)) / den
    B = det(_hankel(cs, 1, k)) / den
    return A, B


def circle_from_AB(A: GaussianRat, B: GaussianRat) -> ExactCircle:
    return ExactCircle(A, B.norm())


# ---------------------------------------------------------------------------
# constructive oracle


def intersect(L: NLineConfig, i: int, j: int) -> GaussianRat:
    """Common point of lines i and j: t_i (z - y_i) = t_j (z - y_j)."""
    ti, tj = L.ts[i], L.ts[j]
    if ti == tj:
        raise GenericityViolation("parallel lines")
    return (ti * L.ys[i] - tj * L.ys[j]) / (ti - tj)


def circumcircle(p1: GaussianRat, p2: GaussianRat, p3: GaussianRat) -> ExactCircle:
    """Circle through three points from the perpendicular-bisector system."""
    a11, a12 = 2 * (p2.re - p1.re), 2 * (p2.im - p1.im)
    a21, a22 = 2 * (p3.re - p1.re), 2 * (p3.im - p1.im)
    b1 = p2.norm() - p1.norm()
    b2 = p3.norm() - p1.norm()
    d = a11 * a22 - a12 * a21
    if d == 0:
        raise GenericityViolation("collinear points have no circumcircle")
    center = GaussianRat((b1 * a22 - a12 * b2) / d, (a11 * b2 - a21 * b1) / d)
    return ExactCircle(center, (p1 - center).norm())


def second_intersection(c1: ExactCircle, c2: ExactCircle, known: GaussianRat) -> GaussianRat:
    """The other common point of two circles through ``known``.

    It is the mirror image of ``known`` in the line of centers, hence rational.
    """
    d = c2.center - c1.center
    if d.is_zero():
        raise GenericityViolation("concentric circles")
    w = c1.center + d / d.conj() * (known - c1.center).conj()
    if w == known:
        raise GenericityViolation("circles are tangent at the known point")
    return w


def constructive_clifford(L: NLineConfig):
    """Clifford point (even n) or circle (odd n) by classical construction.

    Odd n: circle fitted to three subset Clifford points, all others checked.
    Even n: circles of L minus line 1 and L minus line 2 both pass through the
    Clifford point of L minus {1, 2}; their other common point is the answer,
    checked against every remaining subset circle.
    """
    n = L.n
    if n < 2:
        raise ValueError("need at least two lines")
    if n == 2:
        return intersect(L, 0, 1)
    subs = [L.subset([j for j in range(n) if j != i]) for i in range(n)]
    if n == 3:
        pts = [intersect(L, 0, 1), intersect(L, 0, 2), intersect(L, 1, 2)]
        return circumcircle(*pts)
    if n % 2:
        pts = [constructive_clifford(s) for s in subs]
        circle = circumcircle(*pts[:3])
        for p in pts[3:]:
            if not on_circle(p, circle):
                raise GenericityViolation("subset Clifford points are not concyclic")
        return circle
    circles = [constructive_clifford(s) for s in subs]
    shared = constructive_clifford(L.subset(list(range(2, n))))
    w = second_intersection(circles[0], circles[1], shared)
    for c in circles[2:]:
        if not on_circle(w, c):
            raise GenericityViolation("subset circles do not concur")
    return w


def formula_clifford(L: NLineConfig):
    if L.n % 2 == 0:
        return clifford_point_even(L)
    return circle_from_AB(*clifford_circle_odd(L))


@dataclass
class CliffordCheck:
    n: int
    formula: object
    construction: object
    ok: bool
    detail: str = ""


def verify_config(L: NLineConfig) -> CliffordCheck:
    """Compare the Hankel formula with the construction, exactly."""
    n = L.n
    f = formula_clifford(L)
    c = constructive_clifford(L)
    if n % 2 == 0:
        return CliffordCheck(n, f, c, f == c, "" if f == c else "points differ")
    pts = [formula_clifford(L.subset([j for j in range(n) if j != i])) for i in range(n)] if n > 3 else [
        intersect(L, i, j) for i, j in combinations(range(3), 2)
    ]
    bad = [i for i, p in enumerate(pts) if not on_circle(p, f)]
    ok = not bad and f == c
    return CliffordCheck(n, f, c, ok, f"off-circle subset points {bad}" if bad else ("" if ok else "circles differ"))


def random_config(rng, n: int, bound: int = 6, max_tries: int = 1000) -> NLineConfig:
    """Random generic configuration with small Gaussian-integer y_i."""
    for _ in range(max_tries):
        ys = [GaussianRat(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)]
        try:
            L = nline_new(ys)
            formula_clifford(L)
            constructive_clifford(L)
        except (ZeroPoint, GenericityViolation, SingularHankel):
            continue
        return L
    raise GenericityViolation(f"no generic {n}-line found in {max_tries} draws")
