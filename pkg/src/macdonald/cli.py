"""Command-line front end: ``macdonald <subcommand> ...``.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 pass, 1 domain
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction
from math import isqrt

from . import affine, clifford, cohomology, hecke, suites, tableaux, zeta
from .errors import MacdonaldError
from .qt import UT, UQ, XPoly, dumps

log = logging.getLogger("macdonald")

CACHE_ENV = "MACDONALD_CACHE_DIR"
CACHE_FILE = "emem.json"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _sqrt_rat(x: Fraction):
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    return Fraction(a, b) if a * a == x.numerator and b * b == x.denominator else None


def parse_spec(text: str | None) -> dict:
    """``"q=0,t=0"``, ``"q=t"``, ``"t=1/4"`` -> keyword arguments for specialize.

    Values are given for q and t; they must be squares of rationals since the
    coefficients live in the square roots uq, ut.
    """
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        if "=" not in part:
            raise UsageError(f"bad --spec item {part!r}")
        lhs, rhs = (s.strip() for s in part.split("=", 1))
        if lhs not in ("q", "t"):
            raise UsageError(f"--spec can only set q or t, not {lhs!r}")
        key = "uq" if lhs == "q" else "ut"
        if rhs in ("q", "t"):
            if rhs == lhs:
                continue
            out[key] = UQ if rhs == "q" else UT
            continue
        try:
            val = _sqrt_rat(Fraction(rhs))
        except ValueError:
            raise UsageError(f"bad --spec value {rhs!r}")
        if val is None:
            raise UsageError(f"{lhs}={rhs} is not the square of a rational")
        out[key] = val
    return out


def load_memo():
    d = os.environ.get(CACHE_ENV)
    if not d:
        return None, None
    path = os.path.join(d, CACHE_FILE)
    return hecke.EMemo.load(path), path


def save_memo(memo, path):
    if memo is not None and path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        memo.save(path)


def emit_poly(f: XPoly, fmt: str) -> str:
    if fmt == "json":
        return dumps(f)
    return f.to_latex()


def emit(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True)
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {v}" for k, v in obj.items())
    return str(obj)


# ---------------------------------------------------------------------------
# polynomial subcommands


def cmd_p_tab(args):
    f = tableaux.p_tableaux(args.shape, args.n)
    return emit_poly(f.specialize(**parse_spec(args.spec)), args.format)


def cmd_schur(args):
    return emit_poly(tableaux.schur(args.shape, args.n), args.format)


def cmd_p_wcf(args):
    memo, path = load_memo()
    f = hecke.wcf_P(args.shape, args.n, memo)
    save_memo(memo, path)
    return emit_poly(f.specialize(**parse_spec(args.spec)), args.format)


def _check_n(weight, n):
    from .errors import DimensionMismatch

    if n is not None and n != len(weight):
        raise DimensionMismatch(f"weight {weight} has {len(weight)} entries, --n is {n}")


def cmd_e(args):
    _check_n(args.mu, args.n)
    memo, path = load_memo()
    f = hecke.e_poly(args.mu, memo)
    save_memo(memo, path)
    return emit_poly(f.specialize(**parse_spec(args.spec)), args.format)


def cmd_a(args):
    _check_n(args.mu, args.n)
    memo, path = load_memo()
    f = hecke.ferm_A(args.mu, memo)
    save_memo(memo, path)
    return emit_poly(f.specialize(**parse_spec(args.spec)), args.format)


def cmd_hl(args):
    f = hecke.hall_littlewood(args.shape, args.n)
    return emit_poly(f.specialize(**parse_spec(args.spec)), args.format)


# ---------------------------------------------------------------------------
# affine root systems


def cmd_affine(args):
    if args.action == "orbit":
        if not args.vector:
            raise UsageError("affine orbit needs --vector")
        v = affine.parse_vector(args.vector, args.n)
        images = {f"s{i}": str(affine.apply_gen(v, i)) for i in range(v.n + 1)}
        obj = {"vector": str(v), "orbit": affine.orbit_membership(v), "images": images}
        return emit(obj, args.format)
    if args.action == "poset":
        if args.format == "dot":
            return affine.poset_dot()
        text = affine.poset_json()
        return text if args.format == "json" else "\n".join(
            " -> ".join(chain) for chain in affine.maximal_chains())
    if args.action == "path":
        if not (args.source and args.target):
            raise UsageError("affine path needs --from and --to")
        p = affine.specialization_path(args.source, args.target)
        if p is None:
            raise affine.UnknownSystem(f"no specialization path {args.source} -> {args.target}")
        obj = {"path": list(p.nodes), "substitution": {str(k): str(v) for k, v in p.composite.items()}}
        return emit(obj, args.format)
    raise UsageError(f"unknown affine action {args.action!r}")


# ---------------------------------------------------------------------------
# Clifford chain


def _point_obj(p):
    return {"re": str(p.re), "im": str(p.im)}


def _result_obj(r):
    if isinstance(r, clifford.ExactCircle):
        return {"center": _point_obj(r.center), "radius_sq": str(r.radius_sq)}
    return {"point": _point_obj(r)}


def _result_text(r):
    if isinstance(r, clifford.ExactCircle):
        return f"circle center {r.center} radius^2 {r.radius_sq}"
    return f"point {r}"


def write_svg(L, result, path: str) -> None:
    """Lines, pairwise intersections and the Clifford point or circle (display only)."""
    pts = [clifford.intersect(L, i, j) for i in range(L.n) for j in range(i + 1, L.n)]
    cplx = [complex(float(p.re), float(p.im)) for p in pts]
    if isinstance(result, clifford.ExactCircle):
        ctr = complex(float(result.center.re), float(result.center.im))
        rad = float(result.radius_sq) ** 0.5
        cplx += [ctr + rad, ctr - rad, ctr + 1j * rad, ctr - 1j * rad]
    else:
        cplx.append(complex(float(result.re), float(result.im)))
    span = max(max(abs(z.real), abs(z.imag)) for z in cplx + [complex(float(y.re), float(y.im)) for y in L.ys])
    span = 1.2 * span + 1
    size, scale = 600, 300 / span

    def xy(z):
        return 300 + scale * z.real, 300 - scale * z.imag

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">', '<rect width="100%" height="100%" fill="white"/>']
    for y in L.ys:
        # line i is the perpendicular bisector of 0 and y_i
        yc = complex(float(y.re), float(y.im))
        d = 1j * yc / abs(yc) * 3 * span
        (x1, y1), (x2, y2) = xy(yc / 2 - d), xy(yc / 2 + d)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="black"/>')
    for z in cplx[: len(pts)]:
        x, y = xy(z)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="gray"/>')
    if isinstance(result, clifford.ExactCircle):
        x, y = xy(ctr)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{rad * scale:.2f}" fill="none" stroke="red"/>')
    else:
        x, y = xy(cplx[-1])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="red"/>')
    out.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")


def cmd_clifford(args):
    L = clifford.nline_new(clifford.parse_points(args.ys))
    if args.mode == "verify":
        chk = clifford.verify_config(L)
        obj = {"n": L.n, "status": "pass" if chk.ok else "fail", "detail": chk.detail,
               "result": _result_obj(chk.formula)}
        print(emit(obj, args.format))
        if args.svg:
            write_svg(L, chk.formula, args.svg)
        return None if chk.ok else 1
    r = clifford.formula_clifford(L) if args.mode == "formula" else clifford.constructive_clifford(L)
    if args.svg:
        write_svg(L, r, args.svg)
    if args.format == "json":
        return json.dumps({"n": L.n, "mode": args.mode, **_result_obj(r)}, sort_keys=True)
    return _result_text(r)


# ---------------------------------------------------------------------------
# zeta functions and cohomology


def _poly_list(p):
    return [str(Fraction(int(c.p), int(c.q))) for c in p.coeffs()]


def cmd_zeta(args):
    c = zeta.curve_from_numerator(args.q, list(args.numer))
    if args.emit == "z":
        z = zeta.z_sym(c, args.n)
        obj = {"q": c.q, "g": c.g, "n": args.n,
               "numerator": {str(k): _poly_list(zeta.F_k(c, args.n, k)) for k in range(1, 2 * args.n, 2)},
               "denominator": {str(k): _poly_list(zeta.F_k(c, args.n, k)) for k in range(0, 2 * args.n + 1, 2)}}
        num, den = z.expand()
        obj["expanded"] = {"num": _poly_list(num), "den": _poly_list(den)}
        return emit(obj, args.format)
    if args.emit == "counts":
        counts = [zeta.count_points_sym(c, args.n, m) for m in range(1, args.m_max + 1)]
        return emit({"q": c.q, "n": args.n, "counts": counts}, args.format)
    if args.emit == "fe":
        rep = zeta.functional_eq_check(c, args.n)
        alt = zeta.functional_eq_check(c, args.n, q_sign=1)
        obj = {"n": args.n, "exponent": rep.exponent, "status": "pass" if rep.ok else "fail",
               "sign_flipped_prefactor": "pass" if alt.ok else "fail",
               "lhs": [_poly_list(p) for p in rep.lhs], "rhs": [_poly_list(p) for p in rep.rhs]}
        print(emit(obj, args.format))
        return None if rep.ok else 1
    if args.emit == "rh":
        rep = zeta.rh_check(c, args.n, tol=args.tol, strict=False)
        obj = {"n": args.n, "status": "pass" if rep.ok else "fail", "worst_relative_error": rep.worst,
               "factors": {str(k): [{"modulus": m, "j": j} for m, j in v] for k, v in rep.factors.items()}}
        print(emit(obj, args.format))
        return None if rep.ok else 1
    raise UsageError(f"unknown --emit {args.emit!r}")


def cmd_cohomology(args):
    if args.zeta:
        q, _, numer = args.zeta.partition(",")
        try:
            c = zeta.curve_from_numerator(int(q), list(int_list(numer)))
        except (ValueError, argparse.ArgumentTypeError):
            raise UsageError(f"--zeta expects q,numer..., got {args.zeta!r}")
        chk = cohomology.cross_check_zeta(args.g, args.n, c)
        log.info("cross-check with deg F_k passed: %s", chk.degrees)
    if args.emit == "poincare":
        return emit(cohomology.poincare(args.g, args.n), args.format) if args.format != "json" else \
            json.dumps({"g": args.g, "n": args.n, "poincare": cohomology.poincare(args.g, args.n)})
    b = cohomology.betti(args.g, args.n)
    return emit({"g": args.g, "n": args.n, "betti": list(b)}, args.format) if args.format == "json" else \
        " ".join(map(str, b))


# ---------------------------------------------------------------------------
# verification


def cmd_verify(args):
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    memo, path = load_memo()
    results = []
    for name in names:
        if name == "wcf":
            ns = (args.n,) if args.n else (2, 3)
            results.append(suites.wcf_suite(args.max_weight, ns, memo))
        elif name == "clifford":
            ns = (args.n,) if args.n else (2, 3, 4, 5)
            results.append(suites.clifford_suite(ns, args.count, args.seed))
        elif name == "zeta":
            results.append(suites.zeta_suite(n_max=args.n or 3))
        elif name == "cohomology":
            results.append(suites.cohomology_suite(n_max=args.n or 2))
    save_memo(memo, path)
    status = "pass" if all(r.status == "pass" for r in results) else (
        "error" if any(r.status == "error" for r in results) else "fail")
    report = {"status": status, "suites": [r.to_obj() for r in results]}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for r in results:
            print(f"{r.suite}: {r.status} ({r.checked} checked, {r.seconds}s)")
            for f in r.failures[:10]:
                print(f"  {f}", file=sys.stderr)
        print(status)
    return None if status == "pass" else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="macdonald", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    fmt = argparse.ArgumentParser(add_help=False, parents=[common])
    fmt.add_argument("--format", choices=("latex", "json"), default="latex")
    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--spec", help='specialize parameters, e.g. "q=0,t=0" or "q=t"')

    def shape_cmd(name, fn, help_, with_spec=True):
        sp = sub.add_parser(name, parents=[fmt] + ([spec] if with_spec else []), help=help_)
        sp.add_argument("--shape", type=int_list, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.set_defaults(func=fn)

    shape_cmd("p-tab", cmd_p_tab, "P_lambda(q,t) as a tableau sum")
    shape_cmd("p-wcf", cmd_p_wcf, "P_lambda(q,t) as a quotient of antisymmetrized polynomials")
    shape_cmd("schur", cmd_schur, "Schur polynomial", with_spec=False)
    shape_cmd("hl", cmd_hl, "Hall-Littlewood polynomial P_lambda(x;t)")
    for name, fn, help_ in (("e", cmd_e, "nonsymmetric E_mu"), ("a", cmd_a, "antisymmetrized A_mu")):
        sp = sub.add_parser(name, parents=[fmt, spec], help=help_)
        sp.add_argument("--mu", type=int_list, required=True)
        sp.add_argument("--n", type=int)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("affine", parents=[common], help="affine root systems: orbits, poset, specialization paths")
    sp.add_argument("action", choices=("orbit", "poset", "path"))
    sp.add_argument("--vector", help='e.g. "1e1+1d2"')
    sp.add_argument("--n", type=int)
    sp.add_argument("--from", dest="source")
    sp.add_argument("--to", dest="target")
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    sp.set_defaults(func=cmd_affine)

    sp = sub.add_parser("clifford", parents=[common], help="Clifford point or circle of an n-line")
    sp.add_argument("--ys", required=True, help='points y_i as "re,im;re,im;..."')
    sp.add_argument("--mode", choices=("formula", "construct", "verify"), default="formula")
    sp.add_argument("--svg", help="write a picture to this file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_clifford)

    sp = sub.add_parser("zeta", parents=[common], help="zeta function of a symmetric product of a curve")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--numer", type=int_list, required=True, help="numerator of Z_1, low degree first")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emit", choices=("z", "counts", "fe", "rh"), default="z")
    sp.add_argument("--m-max", type=int, default=4, help="number of extensions for --emit counts")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("cohomology", parents=[common], help="Betti numbers of a symmetric product from its presentation")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emit", choices=("betti", "poincare"), default="betti")
    sp.add_argument("--zeta", help="q,numer... of a curve to cross-check against")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("verify", parents=[common], help="run cross-formula suites")
    sp.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    sp.add_argument("--max-weight", type=int, default=4)
    sp.add_argument("--n", type=int)
    sp.add_argument("--count", type=int, default=100, help="random configurations per n")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def _setup_logging(verbose: bool) -> None:
    root = logging.getLogger("macdonald")
    for h in list(root.handlers):
        if getattr(h, "_macdonald_cli", False):
            root.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    handler._macdonald_cli = True
    root.addHandler(handler)
    root.setLevel(logging.INFO if verbose else logging.WARNING)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    _setup_logging(args.verbose)
    t0 = time.perf_counter()
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"macdonald: error: {exc}", file=sys.stderr)
        return 2
    except MacdonaldError as exc:
        print(f"macdonald: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    log.info("done in %.3fs", time.perf_counter() - t0)
    if isinstance(out, int):
        return out
    if out is not None:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
