"""Partitions, semistandard tableaux and the tableau sum for P_lambda(q, t)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BoxOutOfShape, MalformedPartition
from .qt import ONE, Q, T, CoeffElem, XPoly

Box = tuple  # (r, c), 1-based


def partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a partition and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise MalformedPartition(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise MalformedPartition(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partitions(size: int, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``size`` (reverse lex), optionally with bounded length."""

    def rec(rest, largest, prefix):
        if rest == 0:
            yield tuple(prefix)
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for p in range(min(rest, largest), 0, -1):
            yield from rec(rest - p, p, prefix + [p])

    yield from rec(size, size, [])


def boxes(shape: Sequence[int]) -> list[Box]:
    return [(r, c) for r, row in enumerate(shape, start=1) for c in range(1, row + 1)]


def arm(shape, b: Box) -> list[Box]:
    r, c = b
    return [(r, c2) for c2 in range(c + 1, shape[r - 1] + 1)]


def leg(shape, b: Box) -> list[Box]:
    r, c = b
    return [(r2, c) for r2 in range(r + 1, len(shape) + 1) if shape[r2 - 1] >= c]


@dataclass(frozen=True)
class Tableau:
    """A filling of ``shape``; ``rows[r-1][c-1]`` is the entry of box (r, c)."""

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, b: Box) -> int:
        r, c = b
        if not (1 <= r <= len(self.shape) and 1 <= c <= self.shape[r - 1]):
            raise BoxOutOfShape(f"box {b} not in shape {self.shape}")
        return self.rows[r - 1][c - 1]

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for row in self.rows:
            for v in row:
                w[v - 1] += 1
        return tuple(w)

    def is_semistandard(self) -> bool:
        for r, row in enumerate(self.rows):
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if r and any(self.rows[r - 1][c] >= row[c] for c in range(len(row))):
                return False
        return True

    def __str__(self):
        return "/".join("".join(map(str, row)) for row in self.rows)


def enumerate_ssyt(shape: Sequence[int], n: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries in 1..n, in row-reading lex order."""
    shape = partition(shape)
    if len(shape) > n:
        return []
    cells = boxes(shape)
    fill: dict[Box, int] = {}
    out = []

    def rec(k):
        if k == len(cells):
            rows = tuple(tuple(fill[(r, c)] for c in range(1, shape[r - 1] + 1))
                         for r in range(1, len(shape) + 1))
            out.append(Tableau(shape, rows))
            return
        r, c = cells[k]
        lo = 1
        if c > 1:
            lo = fill[(r, c - 1)]
        if r > 1:
            lo = max(lo, fill[(r - 1, c)] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for r2 in range(r + 1, len(shape) + 1) if shape[r2 - 1] >= c)
        for v in range(lo, n - below + 1):
            fill[(r, c)] = v
            rec(k + 1)
        fill.pop((r, c), None)

    rec(0)
    return out


@lru_cache(maxsize=None)
def hook_ratio(a: int, l: int) -> CoeffElem:
    """(1 - t q^a t^l) / (1 - q q^a t^l)."""
    m = Q**a * T**l
    return (1 - T * m) / (1 - Q * m)


def restricted_hook(tab: Tableau, b: Box, i: int) -> tuple[int, int, CoeffElem]:
    """Arm and leg counts of ``b`` restricted to entries below ``i``, and the hook."""
    tab[b]  # raises BoxOutOfShape
    a = sum(1 for b2 in arm(tab.shape, b) if tab[b2] < i)
    l = sum(1 for b2 in leg(tab.shape, b) if tab[b2] < i)
    return a, l, hook_ratio(a, l)


def psi_weight(tab: Tableau) -> CoeffElem:
    out = ONE
    for b in boxes(tab.shape):
        v = tab[b]
        arm_vals = {tab[b2] for b2 in arm(tab.shape, b)}
        leg_vals = {tab[b2] for b2 in leg(tab.shape, b)}
        for i in sorted(arm_vals):
            if i > v and i not in leg_vals:
                out = out * restricted_hook(tab, b, i)[2] / restricted_hook(tab, b, i + 1)[2]
    return out


def p_tableaux(shape: Sequence[int], n: int) -> XPoly:
    """Bosonic Macdonald polynomial P_shape(q, t) in n variables, as a tableau sum."""
    terms: dict = {}
    for tab in enumerate_ssyt(shape, n):
        w = tab.weight(n)
        psi = psi_weight(tab)
        terms[w] = terms[w] + psi if w in terms else psi
    return XPoly(n, terms)


def schur(shape: Sequence[int], n: int) -> XPoly:
    terms: dict = {}
    for tab in enumerate_ssyt(shape, n):
        w = tab.weight(n)
        terms[w] = terms.get(w, 0) + 1
    return XPoly(n, terms)
