"""Command-line driver.

Exit codes: 0 all predictions confirmed, 1 a prediction was violated,
2 usage error, 3 input or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .campaign import SUITES, ConfigError, VerifyConfig, dumps_report, run_campaign
from .errors import SphereLoopError
from .geometry import dist_s, equi_eta, line_gamma
from .hilbert import Tolerances, make_rng
from .laws import count_solution_dimension, solution_set_membership, solution_witnesses
from .loop import SpherePoint, left_translation
from .models.finite import (check_bloop_axioms, format_table, parse_table, quasigroup_to_bloop,
                            zn_reflection)
from .orthogonal import factorize

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

FACTORIZE_TOL = 1e-8


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _suite_list(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    bad = [v for v in names if v not in SUITES]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)}")
    return names


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _vector(text: str) -> np.ndarray:
    """Parse '0,1,0' or '[0, 1, 0]' into a float vector."""
    try:
        s = text.strip()
        vals = json.loads(s) if s.startswith("[") else [float(v) for v in s.split(",")]
        return np.asarray(vals, dtype=np.float64)
    except (ValueError, TypeError):
        raise InputError(f"cannot parse point {text!r}") from None


def _point(text: str) -> SpherePoint:
    v = _vector(text)
    if v.ndim != 1 or v.size < 2 or not np.all(np.isfinite(v)):
        raise InputError(f"point {text!r} must be a finite vector of length >= 2")
    return SpherePoint(v)


def _fmt(v: float, digits: int) -> str:
    if abs(v) < 1e-15:
        v = 0.0
    out = f"{v:.{digits}g}"
    return "0" if out == "-0" else out


# -- commands --------------------------------------------------------------------

def cmd_verify(args) -> int:
    tol_kw = {k: getattr(args, k) for k in ("eps_unit", "eps_pole", "eps_op", "eps_res")
              if getattr(args, k) is not None}
    try:
        cfg = VerifyConfig(dims=tuple(args.dims), samples=args.samples, seed=args.seed,
                           suites=tuple(args.suites), tol=Tolerances(**tol_kw))
    except (ConfigError, ValueError) as exc:
        args.parser.error(str(exc))
    doc = run_campaign(cfg)
    text = dumps_report(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        for s in doc["suites"]:
            bad = [f"{l['name']}@{l['dim']}" for l in s["laws"] if not l["passed"]]
            state = "PASS" if s["passed"] else "FAIL " + ", ".join(bad)
            print(f"{s['suite']:<11s} {state}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc["passed"] else EXIT_VIOLATION


def cmd_curve(args) -> int:
    if args.steps < 1:
        args.parser.error("--steps must be >= 1")
    x, y = _point(args.x), _point(args.y)
    if x.dim != y.dim:
        raise InputError("x and y must have the same dimension")
    ts = np.linspace(args.t0, args.t1, args.steps) if args.steps > 1 else np.array([args.t0])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["t"] + [f"c{i}" for i in range(x.dim)]
    if args.kind == "equi":
        header.append("d_s")
    w.writerow(header)
    for t in ts:
        if args.kind == "line":
            p = line_gamma(x, y, float(t))
            row = [t, *p.vec]
        else:
            eta, nu = equi_eta(x, y, float(t))
            row = [t, *eta.vec, dist_s(eta, nu)]
        w.writerow([_fmt(float(v), args.digits) for v in row])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_factorize(args) -> int:
    try:
        A = np.asarray(json.loads(Path(args.matrix).read_text(encoding="utf-8")), dtype=np.float64)
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"cannot read matrix: {exc}") from None
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 2:
        raise InputError(f"matrix must be square with size >= 2, got shape {A.shape}")
    tol = Tolerances(eps_op=FACTORIZE_TOL)
    f = factorize(A, tol)
    residual = float(np.max(np.abs(left_translation(f.u, tol) @ f.U - A)))
    doc = {"u": f.u.vec.tolist(), "U": f.U.tolist(), "residual": residual}
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if residual <= FACTORIZE_TOL else EXIT_VIOLATION


def cmd_table(args) -> int:
    if args.model == "zn":
        if args.n < 3 or args.n % 2 == 0:
            args.parser.error("zn needs an odd n >= 3")
        sys.stdout.write(format_table(zn_reflection(args.n)))
    return EXIT_OK


def cmd_isotopy(args) -> int:
    try:
        text = Path(args.table).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read table: {exc}") from None
    m = parse_table(text)
    if not 0 <= args.e < m.n:
        raise InputError(f"e = {args.e} out of range for n = {m.n}")
    loop = quasigroup_to_bloop(m, args.e)
    rep = check_bloop_axioms(loop, args.e)
    sys.stdout.write(format_table(loop))
    sys.stdout.write("\n".join(rep.lines()) + "\n")
    return EXIT_OK if rep.holds() else EXIT_VIOLATION


def cmd_solutions(args) -> int:
    a = _point(args.a)
    dim = count_solution_dimension(a, make_rng(args.seed))
    pts = solution_witnesses(a, args.count, make_rng(args.seed, 1))
    doc = {
        "a": a.vec.tolist(),
        "solution_dimension": dim,
        "witnesses": [p.vec.tolist() for p in pts],
        "members": [solution_set_membership(a, p) for p in pts] if a.dim >= 3 else [True] * len(pts),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if all(doc["members"]) else EXIT_VIOLATION


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphereloop", description="Left loop on the sphere: tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run seeded verification suites, emit a JSON report")
    v.add_argument("--dims", type=_int_list, default=[2, 3, 4])
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--suites", type=_suite_list, default=list(SUITES))
    v.add_argument("--out", help="write JSON here instead of stdout")
    for name in ("eps_unit", "eps_pole", "eps_op", "eps_res"):
        v.add_argument("--" + name.replace("_", "-"), dest=name, type=float, default=None)
    v.set_defaults(func=cmd_verify, parser=v)

    c = sub.add_parser("curve", help="sample a line or an equidistant curve as CSV")
    c.add_argument("kind", choices=["line", "equi"])
    c.add_argument("x")
    c.add_argument("y")
    c.add_argument("--t0", type=float, default=0.0)
    c.add_argument("--t1", type=float, default=1.0)
    c.add_argument("--steps", type=int, default=11)
    c.add_argument("--digits", type=int, default=8, help="significant digits in the CSV")
    c.set_defaults(func=cmd_curve, parser=c)

    f = sub.add_parser("factorize", help="factor an orthogonal matrix as L_u U")
    f.add_argument("matrix", help="JSON file holding an array of rows")
    f.set_defaults(func=cmd_factorize, parser=f)

    t = sub.add_parser("table", help="print a Cayley table")
    t.add_argument("model", choices=["zn"])
    t.add_argument("n", type=int)
    t.set_defaults(func=cmd_table, parser=t)

    i = sub.add_parser("isotopy", help="B-loop of a reflection quasigroup, with its axiom report")
    i.add_argument("table")
    i.add_argument("e", type=int)
    i.set_defaults(func=cmd_isotopy, parser=i)

    s = sub.add_parser("solutions", help="sample solutions of x odot a = -a^-1")
    s.add_argument("a")
    s.add_argument("--count", type=int, default=3)
    s.add_argument("--seed", type=_seed, default=0)
    s.set_defaults(func=cmd_solutions, parser=s)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SphereLoopError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
