"""Brute-force point counts of odd-degree hyperelliptic curves y^2 = f(x).

A small test oracle over F_p and F_{p^2}, p an odd prime; not a general
point-counting engine.  The curve has one point at infinity.
"""

from __future__ import annotations

from .zeta import elementary_from_power_sums


def _nonresidue(p: int) -> int:
    return next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)


class Fp2:
    """Arithmetic in F_p[s]/(s^2 - d) with d a non-residue; elements are pairs."""

    def __init__(self, p: int):
        self.p, self.d = p, _nonresidue(p)

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def mul(self, x, y):
        p, d = self.p, self.d
        return ((x[0] * y[0] + d * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def pow(self, x, e):
        out = (1, 0)
        while e:
            if e & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            e >>= 1
        return out

    def chi(self, x) -> int:
        """Quadratic character on F_{p^2}."""
        if x == (0, 0):
            return 0
        return 1 if self.pow(x, (self.p**2 - 1) // 2) == (1, 0) else -1


def _check(p: int, f) -> None:
    if p < 3 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not an odd prime")
    if len(f) % 2 == 1 or f[-1] % p == 0:
        raise ValueError("f must have odd degree with a unit leading coefficient")


def count_fp(p: int, f) -> int:
    """Affine solutions over F_p plus the point at infinity; f low-to-high."""
    _check(p, f)
    total = 1
    for x in range(p):
        v = sum(c * pow(x, k, p) for k, c in enumerate(f)) % p
        total += 1 if v == 0 else (2 if pow(v, (p - 1) // 2, p) == 1 else 0)
    return total


def count_fp2(p: int, f) -> int:
    _check(p, f)
    F = Fp2(p)
    total = 1
    for x in F.elements():
        v, xk = (0, 0), (1, 0)
        for c in f:
            v = F.add(v, ((c * xk[0]) % p, (c * xk[1]) % p))
            xk = F.mul(xk, x)
        total += 1 + F.chi(v)
    return total


def hyperelliptic_numerator(p: int, f) -> list[int]:
    """Numerator of Z_1 for y^2 = f(x) of genus <= 2 from counts over F_p, F_{p^2}."""
    g = (len(f) - 2) // 2
    if g > 2:
        raise ValueError("only genus <= 2 is supported (needs counts up to F_{p^g})")
    counts = [count_fp(p, f), count_fp2(p, f)][:g]
    # N_m = p^m + 1 - s_m with s_m the power sums of the Frobenius roots
    s = [p ** (m + 1) + 1 - N for m, N in enumerate(counts)]
    e = elementary_from_power_sums([0] + s, g)
    low = [1] + [int((-1) ** k * e[k]) for k in range(1, g + 1)]
    # palindromy: a_{2g-k} = p^{g-k} a_k
    return low + [p ** (g - k) * low[k] for k in range(g - 1, -1, -1)]
