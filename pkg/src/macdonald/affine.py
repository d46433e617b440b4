"""The lattice spanned by eps_1..eps_n and delta/2, the affine Weyl group
generated by s_0..s_n, its five orbits, and the poset of classical affine
root systems with their specialization tuples."""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import UnknownSystem


@dataclass(frozen=True)
class AffineVector:
    """sum eps[i] * eps_{i+1} + (delta2 / 2) * delta."""

    eps: tuple[int, ...]
    delta2: int = 0

    @property
    def n(self):
        return len(self.eps)

    @classmethod
    def basis(cls, n, i, coef=1, delta2=0):
        eps = [0] * n
        eps[i - 1] = coef
        return cls(tuple(eps), delta2)

    def __add__(self, other):
        return AffineVector(tuple(a + b for a, b in zip(self.eps, other.eps)), self.delta2 + other.delta2)

    def __neg__(self):
        return AffineVector(tuple(-a for a in self.eps), -self.delta2)

    def __str__(self):
        parts = [f"{c}e{i}" for i, c in enumerate(self.eps, start=1) if c]
        if self.delta2:
            parts.append(f"{self.delta2}d2")
        return "+".join(parts).replace("+-", "-") or "0"


_TERM = re.compile(r"([+-]?\d*)(e(\d+)|d2|d)")


def parse_vector(text: str, n: int | None = None) -> AffineVector:
    """Parse ``"1e1-2e3+3d2"``: ``e<i>`` is eps_i, ``d2`` is delta/2, ``d`` is delta."""
    s = text.replace(" ", "")
    pos, terms = 0, []
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse vector {text!r}")
        pos = m.end()
        c = m.group(1)
        coef = int(c) if c not in ("", "+", "-") else (-1 if c == "-" else 1)
        terms.append((coef, m.group(2), m.group(3)))
    if pos != len(s) or not terms:
        raise ValueError(f"cannot parse vector {text!r}")
    top = max((int(i) for _, _, i in terms if i), default=1)
    n = top if n is None else n
    if top > n:
        raise ValueError(f"index {top} exceeds n={n}")
    eps, d2 = [0] * n, 0
    for coef, kind, i in terms:
        if i:
            eps[int(i) - 1] += coef
        elif kind == "d2":
            d2 += coef
        else:
            d2 += 2 * coef
    return AffineVector(tuple(eps), d2)


def apply_gen(v: AffineVector, i: int) -> AffineVector:
    """Generator s_i of the affine Weyl group, i in 0..n."""
    n = v.n
    eps = list(v.eps)
    if i == 0:
        l1 = eps[0]
        eps[0] = -l1
        return AffineVector(tuple(eps), v.delta2 + 2 * l1)
    if i == n:
        eps[-1] = -eps[-1]
        return AffineVector(tuple(eps), v.delta2)
    if 1 <= i < n:
        eps[i - 1], eps[i] = eps[i], eps[i - 1]
        return AffineVector(tuple(eps), v.delta2)
    raise ValueError(f"generator index {i} outside 0..{n}")


ORBITS = ("O1", "O2", "O3", "O4", "O5")


def orbit_membership(v: AffineVector) -> str | None:
    """Which of O1..O5 contains v, or None."""
    nz = sorted(abs(c) for c in v.eps if c)
    d = v.delta2
    if nz == [1]:
        return "O1" if d % 2 == 0 else "O3"
    if nz == [2]:
        if d % 4 == 0:
            return "O2"
        if d % 4 == 2:
            return "O4"
        return None
    if nz == [1, 1] and d % 2 == 0:
        return "O5"
    return None


def orbit_closure_check(seed: AffineVector, radius: int) -> set[AffineVector]:
    """Everything reachable from seed in at most ``radius`` generator steps."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {seed}
    frontier = [seed]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for i in range(v.n + 1):
                u = apply_gen(v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


ORBIT_SEEDS = {
    "O1": lambda n: AffineVector.basis(n, n),
    "O2": lambda n: AffineVector.basis(n, n, 2),
    "O3": lambda n: AffineVector.basis(n, 1, -1, 1),
    "O4": lambda n: AffineVector.basis(n, 1, -2, 2),
    "O5": lambda n: AffineVector.basis(n, 1) + AffineVector.basis(n, 2, -1),
}


# ---------------------------------------------------------------------------
# catalog

PARAMS = ("tn", "un", "t0", "u0")
_PARAM_TEX = {"tn": "t_n^{1/2}", "un": "u_n^{1/2}", "t0": "t_0^{1/2}", "u0": "u_0^{1/2}",
              "1": "1", "t": "t"}


@dataclass(frozen=True)
class SystemDescriptor:
    key: str
    kac_name: str | None
    macdonald_name: str | None
    bruhat_tits_name: str | None
    orbits: frozenset = field(default_factory=frozenset)
    spec_tuple: tuple | None = None

    def names(self):
        return [s for s in (self.key, self.kac_name, self.macdonald_name, self.bruhat_tits_name) if s]

    def spec_latex(self):
        if self.spec_tuple is None:
            return None
        return "P_\\mu(x;q," + ",".join(_PARAM_TEX[s] for s in self.spec_tuple) + ")"


@dataclass(frozen=True)
class PosetEdge:
    upper: str
    lower: str


def _sd(key, kac, mac, bt, orbits, tup):
    return SystemDescriptor(key, kac, mac, bt, frozenset(orbits), tup)


_NODES = (
    _sd("CvC", None, "(C_n^vee,C_n)", "C-BC_n^II", ORBITS, ("tn", "un", "t0", "u0", "t")),
    _sd("CvBC", None, "(C_n^vee,BC_n)", "C-BC_n^I", ("O1", "O2", "O3", "O5"), ("tn", "un", "t0", "t0", "t")),
    _sd("BCC", None, "(BC_n,C_n)", "C-BC_n^IV", ("O1", "O2", "O4", "O5"), ("tn", "un", "t0", "1", "t")),
    _sd("Cv", "D_{n+1}^(2)", "C_n^vee", "C-B_n", ("O1", "O3", "O5"), ("tn", "tn", "t0", "t0", "t")),
    _sd("BBv", None, "(B_n,B_n^vee)", "B-BC_n", ("O1", "O2", "O5"), ("tn", "un", "1", "1", "t")),
    _sd("BC", "A_{2n}^(2)", "BC_n", "C-BC_n^III", ("O1", "O4", "O5"), ("tn", "tn", "t0", "1", "t")),
    _sd("C", "C_n^(1)", "C_n", "C_n", ("O2", "O4", "O5"), ("tn", "1", "t0", "1", "t")),
    _sd("B", "B_n^(1)", "B_n", "B_n", ("O1", "O5"), ("tn", "tn", "1", "1", "t")),
    _sd("Bv", "A_{2n-1}^(2)", "B_n^vee", "B-C_n", ("O2", "O5"), ("tn", "1", "1", "1", "t")),
    _sd("D", "D_n^(1)", "D_n", "D_n", ("O5",), ("1", "1", "1", "1", "t")),
    _sd("GL", None, "GL_n", None, (), None),
    _sd("empty", None, "emptyset", None, (), None),
)

_EDGES = (
    ("CvC", "CvBC"), ("CvC", "BCC"), ("CvBC", "Cv"), ("CvBC", "BBv"),
    ("BCC", "BC"), ("BCC", "C"), ("Cv", "B"), ("BBv", "B"), ("BBv", "Bv"),
    ("BC", "B"), ("C", "Bv"), ("B", "D"), ("Bv", "D"), ("D", "GL"), ("GL", "empty"),
)

TYPE_B_KEYS = ("CvC", "CvBC", "BCC", "Cv", "BBv", "BC", "C", "B", "Bv")


def catalog() -> tuple[list[SystemDescriptor], list[PosetEdge]]:
    return list(_NODES), [PosetEdge(a, b) for a, b in _EDGES]


def lookup(name: str) -> SystemDescriptor:
    want = name.strip().lower().replace(" ", "")
    for node in _NODES:
        if any(want == s.lower().replace(" ", "") for s in node.names()):
            return node
    raise UnknownSystem(name)


def edge_substitution(upper: SystemDescriptor, lower: SystemDescriptor) -> dict | None:
    """Parameter map sending upper.spec_tuple to lower.spec_tuple entrywise.

    Returns None when no consistent map exists (or either side has no tuple).
    """
    if upper.spec_tuple is None or lower.spec_tuple is None:
        return None
    sub: dict = {}
    for a, b in zip(upper.spec_tuple, lower.spec_tuple):
        if a == b:
            sub.setdefault(a, a)
            if sub[a] != a:
                return None
            continue
        if a not in PARAMS or sub.get(a, b) != b:
            return None
        sub[a] = b
    return {k: v for k, v in sub.items() if k != v}


def apply_substitution(tup, sub):
    return tuple(sub.get(s, s) for s in tup)


def compose_substitutions(first: dict, second: dict) -> dict:
    """Substitution equal to applying ``first`` and then ``second``."""
    out = {}
    for p in PARAMS:
        img = second.get(first.get(p, p), first.get(p, p))
        if img != p:
            out[p] = img
    return out


@dataclass(frozen=True)
class SpecializationPath:
    nodes: tuple[str, ...]
    steps: tuple  # per-edge substitution dicts (None past D)
    composite: dict


def _children():
    kids: dict = {node.key: [] for node in _NODES}
    for a, b in _EDGES:
        kids[a].append(b)
    return kids


def specialization_path(a: str, b: str) -> SpecializationPath | None:
    """Downward chain from a to b with the composite substitution, or None."""
    top, bottom = lookup(a), lookup(b)
    kids = _children()
    prev = {top.key: None}
    queue = deque([top.key])
    while queue:
        k = queue.popleft()
        for c in kids[k]:
            if c not in prev:
                prev[c] = k
                queue.append(c)
    if bottom.key not in prev:
        return None
    chain = [bottom.key]
    while prev[chain[-1]] is not None:
        chain.append(prev[chain[-1]])
    chain.reverse()
    by_key = {node.key: node for node in _NODES}
    steps, composite = [], {}
    for u, l in zip(chain, chain[1:]):
        s = edge_substitution(by_key[u], by_key[l])
        steps.append(s)
        if s is not None:
            composite = compose_substitutions(composite, s)
    return SpecializationPath(tuple(chain), tuple(steps), composite)


def maximal_chains(start="CvC", end="empty") -> list[tuple[str, ...]]:
    kids = _children()
    out = []

    def walk(path):
        k = path[-1]
        if k == end:
            out.append(tuple(path))
            return
        for c in kids[k]:
            walk(path + [c])

    walk([lookup(start).key])
    return out


def poset_json() -> str:
    nodes, edges = catalog()
    return json.dumps(
        {
            "nodes": [
                {
                    "key": s.key,
                    "kac": s.kac_name,
                    "macdonald": s.macdonald_name,
                    "bruhat_tits": s.bruhat_tits_name,
                    "orbits": sorted(s.orbits),
                    "spec_tuple": list(s.spec_tuple) if s.spec_tuple else None,
                }
                for s in nodes
            ],
            "edges": [[e.upper, e.lower] for e in edges],
        },
        indent=2,
    )


def poset_dot() -> str:
    nodes, edges = catalog()
    lines = ["digraph affine_root_systems {", "  rankdir=TB;"]
    for s in nodes:
        label = " = ".join(x for x in (s.kac_name, s.macdonald_name, s.bruhat_tits_name) if x)
        if s.orbits:
            label += "\\n" + ",".join(sorted(s.orbits))
        if s.spec_tuple:
            label += "\\n(" + ",".join(s.spec_tuple) + ")"
        lines.append(f'  {s.key} [label="{label}"];')
    for e in edges:
        lines.append(f"  {e.upper} -> {e.lower};")
    lines.append("}")
    return "\n".join(lines)


def random_vector(rng, n: int, bound: int = 5) -> AffineVector:
    return AffineVector(tuple(rng.randint(-bound, bound) for _ in range(n)), rng.randint(-2 * bound, 2 * bound))


def random_orbit_element(rng, n: int, orbit: str, steps: int = 12) -> AffineVector:
    """Random walk of generator applications starting at the orbit's seed."""
    v = ORBIT_SEEDS[orbit](n)
    for _ in range(steps):
        v = apply_gen(v, rng.randint(0, n))
    return v


def iter_orbit_predicate_members(n: int, orbit: str, rmax: int) -> Iterable[AffineVector]:
    """Enumerate the closed-form description of an orbit for |r| <= rmax."""
    for r in range(-rmax, rmax + 1):
        for i in range(1, n + 1):
            for sgn in (1, -1):
                if orbit == "O1":
                    yield AffineVector.basis(n, i, sgn, 2 * r)
                elif orbit == "O2":
                    yield AffineVector.basis(n, i, 2 * sgn, 4 * r)
                elif orbit == "O3":
                    yield AffineVector.basis(n, i, sgn, sgn * (2 * r + 1))
                elif orbit == "O4":
                    yield AffineVector.basis(n, i, 2 * sgn, 2 * (2 * r + 1))
        if orbit == "O5":
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for si in (1, -1):
                        for sj in (1, -1):
                            yield AffineVector.basis(n, i, si) + AffineVector.basis(n, j, sj, 2 * r)
