"""Cross-formula verification suites behind ``macdonald verify``."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field

from . import clifford, cohomology, hecke, tableaux, zeta
from .errors import InternalMismatch, MacdonaldError, MismatchReport


@dataclass
class SuiteResult:
    suite: str
    status: str  # pass | fail | error
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def to_obj(self) -> dict:
        return asdict(self)


def _run(name, body) -> SuiteResult:
    res = SuiteResult(name, "pass")
    t0 = time.perf_counter()
    try:
        body(res)
    except MacdonaldError as exc:
        res.status = "error"
        res.failures.append(f"{type(exc).__name__}: {exc}")
    res.seconds = round(time.perf_counter() - t0, 3)
    if res.status == "pass" and res.failures:
        res.status = "fail"
    return res


def wcf_suite(max_weight: int = 4, ns=(2, 3), memo=None) -> SuiteResult:
    """Tableau sum against the Weyl-character quotient."""

    def body(res):
        for n in ns:
            for size in range(max_weight + 1):
                for lam in tableaux.partitions(size, n):
                    res.checked += 1
                    if hecke.wcf_P(lam, n, memo) != tableaux.p_tableaux(lam, n):
                        res.failures.append({"shape": list(lam), "n": n})

    return _run("wcf", body)


def clifford_suite(ns=(2, 3, 4, 5), count: int = 100, seed: int = 0) -> SuiteResult:
    """Hankel formula against the classical construction on random configurations."""

    def body(res):
        rng = random.Random(seed)
        for n in ns:
            for k in range(count):
                L = clifford.random_config(rng, n)
                res.checked += 1
                chk = clifford.verify_config(L)
                if not chk.ok:
                    res.failures.append({"n": n, "index": k, "ys": [str(y) for y in L.ys],
                                         "detail": chk.detail})

    return _run("clifford", body)


ZETA_CURVES = ((2, (1, 0, 2)), (7, (1, 0, 0, 0, 49)))


def zeta_suite(curves=ZETA_CURVES, n_max: int = 3, m_max: int = 4) -> SuiteResult:
    """Log-derivative counts against base-changed curve counts."""

    def body(res):
        for q, numer in curves:
            c = zeta.curve_from_numerator(q, list(numer))
            for n in range(1, n_max + 1):
                for m in range(1, m_max + 1):
                    res.checked += 1
                    try:
                        zeta.count_points_sym(c, n, m)
                    except InternalMismatch as exc:
                        res.failures.append({"q": q, "n": n, "m": m, "detail": str(exc)})

    return _run("zeta", body)


def cohomology_suite(curves=ZETA_CURVES, n_max: int = 2) -> SuiteResult:
    """Betti numbers of the presentation against degrees of the zeta factors."""

    def body(res):
        for q, numer in curves:
            c = zeta.curve_from_numerator(q, list(numer))
            for n in range(1, n_max + 1):
                res.checked += 1
                try:
                    cohomology.cross_check_zeta(c.g, n, c)
                except MismatchReport as exc:
                    res.failures.append({"g": c.g, "n": n, "detail": str(exc)})

    return _run("cohomology", body)


SUITES = ("wcf", "clifford", "zeta", "cohomology")
