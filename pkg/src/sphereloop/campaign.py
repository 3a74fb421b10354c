"""Seeded Monte Carlo verification campaigns.

A campaign runs named suites over a list of dimensions.  Each sample draws
its inputs from its own PCG64 stream keyed by (seed, suite, dim, index), so
any sample can be replayed alone and the report does not depend on how the
work is scheduled.  Residuals are computed with the vectorized kernels.

Every law is summarized by one :class:`LawSummary`.  In mode ``"all"`` each
sample must confirm the prediction (residual <= tol when predicted to hold,
residual > 10 tol when predicted to fail); in mode ``"exists"`` at least one
sample must exhibit a residual above ``threshold``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from . import __version__
from . import batch as B
from .hilbert import (DEFAULT_TOL, Tolerances, embed_V, make_rng, orthogonal_from_gaussian,
                      random_sphere_point)
from .laws import FAIL_FACTOR

SUITES = ("kikkawa", "lpa", "bol", "metric", "semidirect", "models")
SCHEMA = "sphereloop.verify/1"

# Samples closer than this to an identity's exception boundary are left out of
# sweeps; conditioning there degrades like eps / distance.
MARGIN = 1e-6


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class VerifyConfig:
    dims: tuple[int, ...] = (2, 3, 4)
    samples: int = 1000
    seed: int = 0
    suites: tuple[str, ...] = SUITES
    tol: Tolerances = DEFAULT_TOL

    def __post_init__(self):
        dims = tuple(sorted(set(int(d) for d in self.dims)))
        if not dims or dims[0] < 2:
            raise ConfigError("dims must be a non-empty list of integers >= 2")
        if int(self.samples) < 1:
            raise ConfigError("samples must be >= 1")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        unknown = set(self.suites) - set(SUITES)
        if unknown or not self.suites:
            raise ConfigError(f"suites must be a non-empty subset of {', '.join(SUITES)}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "samples", int(self.samples))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "suites", tuple(s for s in SUITES if s in self.suites))

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "samples": self.samples, "seed": self.seed,
                "suites": list(self.suites), "tolerances": asdict(self.tol)}


@dataclass
class LawSummary:
    name: str
    dim: int | None
    samples: int
    predicted_holds: bool
    tolerance: float
    max_residual: float
    min_residual: float
    witness_index: int | None
    witness: list
    mode: str = "all"
    threshold: float | None = None
    nan_count: int = 0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.samples == 0 or self.nan_count:
            return False
        if self.mode == "exists":
            return self.max_residual > self.threshold
        if self.predicted_holds:
            return self.max_residual <= self.tolerance
        return self.min_residual > FAIL_FACTOR * self.tolerance

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "dim": self.dim,
            "passed": self.passed,
            "predicted_holds": self.predicted_holds,
            "mode": self.mode,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "min_residual": self.min_residual,
            "witness": {"index": self.witness_index, "inputs": self.witness},
        }
        if self.threshold is not None:
            d["threshold"] = self.threshold
        if self.nan_count:
            d["nan_count"] = self.nan_count
        if self.notes:
            d["notes"] = self.notes
        return d


def summarize(name: str, dim: int | None, residuals, inputs: dict[str, np.ndarray], *,
              tol: float, predicted_holds: bool = True, mode: str = "all",
              threshold: float | None = None, mask=None, notes: dict | None = None) -> LawSummary:
    """Reduce per-sample residuals to a summary with the worst sample as witness."""
    r = np.asarray(residuals, dtype=np.float64).reshape(-1)
    idx = np.arange(r.size)
    if mask is not None:
        m = np.asarray(mask, dtype=bool).reshape(-1)
        r, idx = r[m], idx[m]
    nan = np.isnan(r)
    finite = r[~nan]
    if finite.size == 0:
        return LawSummary(name, dim, int(r.size), predicted_holds, tol, 0.0, 0.0, None, [],
                          mode, threshold, int(nan.sum()), notes or {})
    fidx = idx[~nan]
    if mode == "all" and not predicted_holds:
        k = int(np.argmin(finite))
    else:
        k = int(np.argmax(finite))
    wi = int(fidx[k])
    witness = [np.asarray(v[wi]).tolist() for v in inputs.values()]
    return LawSummary(name, dim, int(r.size), predicted_holds, float(tol), float(finite.max()),
                      float(finite.min()), wi, witness, mode, threshold, int(nan.sum()),
                      notes or {})


# -- sampling ------------------------------------------------------------------

def draw_samples(cfg: VerifyConfig, suite: str, dim: int,
                 draw: Callable[[np.random.Generator], dict]) -> dict[str, np.ndarray]:
    """Stack ``draw(rng)`` over per-sample streams make_rng(seed, suite, dim, i)."""
    sidx = SUITES.index(suite)
    rows = [draw(make_rng(cfg.seed, sidx, dim, i)) for i in range(cfg.samples)]
    return {k: np.stack([np.asarray(r[k]) for r in rows]) for k in rows[0]}


def _pts(rng, dim: int, k: int, tol: Tolerances) -> list[np.ndarray]:
    return [random_sphere_point(dim, rng, exclude_pole=True, tol=tol) for _ in range(k)]


def _e0(n: int, dim: int) -> np.ndarray:
    e = np.zeros((n, dim))
    e[:, 0] = 1.0
    return e


def _away(x, margin: float = MARGIN) -> np.ndarray:
    return B.norm(B.plus_e0(x)) > margin


# -- suites --------------------------------------------------------------------

def suite_kikkawa(cfg: VerifyConfig, dim: int) -> list[LawSummary]:
    tol = cfg.tol
    ep = tol.eps_pole

    def draw(rng):
        x, y, u, v = _pts(rng, dim, 4, tol)
        return {"x": x, "y": y, "u": u, "v": v}

    s = draw_samples(cfg, "kikkawa", dim, draw)
    x, y, u, v = s["x"], s["y"], s["u"], s["v"]
    Jx, Jy = B.apply_J(x), B.apply_J(y)
    xy = B.odot(x, y, ep)
    out = []

    lip = np.maximum(B.norm(B.odot(Jx, xy, ep) - y), B.norm(B.odot(x, B.odot(Jx, y, ep), ep) - y))
    out.append(summarize("lip", dim, lip, {"x": x, "y": y}, tol=tol.eps_res))
    LJxLx = B.left_translation(Jx, ep) @ B.left_translation(x, ep)
    out.append(summarize("lip_operator", dim, B.max_abs(LJxLx - np.eye(dim)), {"x": x},
                         tol=tol.eps_op))
    aip = B.norm(B.apply_J(xy) - B.odot(Jx, Jy, ep))
    out.append(summarize("aip", dim, aip, {"x": x, "y": y}, tol=tol.eps_res))

    A = B.left_inner(x, y, ep)
    al = B.norm(B.matvec(A, B.odot(u, v, ep)) - B.odot(B.matvec(A, u), B.matvec(A, v), ep))
    out.append(summarize("a_l", dim, al, {"x": x, "y": y, "u": u, "v": v}, tol=tol.eps_res))
    inOV = np.maximum(B.max_abs(np.swapaxes(A, -1, -2) @ A - np.eye(dim)),
                      B.norm(A[..., :, 0] - _e0(len(x), dim)))
    out.append(summarize("left_inner_in_OV", dim, inOV, {"x": x, "y": y}, tol=tol.eps_op))

    cross = B.norm(xy - B.odot_alt(x, y, ep))
    out.append(summarize("odot_vs_odot_alt", dim, cross, {"x": x, "y": y}, tol=1e-12))

    # the compatibility law is also run with x at both poles
    k = min(len(x), 100)
    xc = np.concatenate([x, _e0(k, dim), -_e0(k, dim)])
    yc = np.concatenate([y, y[:k], y[:k]])
    compat = B.norm(B.symm(xc, yc) - B.odot(xc, B.odot(xc, B.apply_J(yc), ep), ep))
    out.append(summarize("compat", dim, compat, {"x": xc, "y": yc}, tol=tol.eps_res,
                         notes={"pole_rows": 2 * k}))

    trans = B.norm(B.odot(xy, B.apply_J(B.odot(x, u, ep)), ep) - B.matvec(A, B.odot(y, B.apply_J(u), ep), ))
    out.append(summarize("trans_ident", dim, trans, {"x": x, "y": y, "z": u}, tol=tol.eps_res))
    At = np.swapaxes(A, -1, -2)
    # L(y, x) goes through L_{y odot x}^-1, which is discontinuous at -e0
    yx_ok = _away(B.odot(y, x, ep))
    out.append(summarize("kik_inv", dim, B.max_abs(At - B.left_inner(y, x, ep)),
                         {"x": x, "y": y}, tol=tol.eps_res, mask=yx_ok))
    out.append(summarize("lip_inv", dim, B.max_abs(At - B.left_inner(Jx, xy, ep)),
                         {"x": x, "y": y}, tol=tol.eps_res))
    bruck = B.norm(B.matvec(A, B.odot(y, x, ep)) - xy)
    out.append(summarize("bruck", dim, bruck, {"x": x, "y": y}, tol=tol.eps_res))

    unit = np.max(np.abs(np.stack([B.norm(xy), B.norm(B.symm(x, y)), B.norm(B.sqrt_point(x, ep))]) - 1.0),
                  axis=0)
    out.append(summarize("unit_closure", dim, unit, {"x": x, "y": y}, tol=tol.eps_unit))
    return out


def suite_lpa(cfg: VerifyConfig, dim: int) -> list[LawSummary]:
    tol = cfg.tol
    ep = tol.eps_pole

    def draw(rng):
        x, y, z = _pts(rng, dim, 3, tol)
        s, t, u = rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.random()
        return {"x": x, "y": y, "z": z, "s": s, "t": t, "u": u}

    d = draw_samples(cfg, "lpa", dim, draw)
    x, y, z, s, t, u = d["x"], d["y"], d["z"], d["s"], d["t"], d["u"]
    n = len(x)
    generic = _away(x, 1e-3) & (B.norm(x - _e0(n, dim)) > 1e-3)
    a = B.angle_from_e0(x)
    xs, xt, xst = B.power(x, s, ep), B.power(x, t, ep), B.power(x, s + t, ep)
    out = []

    out.append(summarize("power_one", dim, B.norm(B.power(x, 1.0, ep) - x), {"x": x}, tol=tol.eps_res))
    out.append(summarize("power_inverse", dim, B.norm(B.power(x, -1.0, ep) - B.apply_J(x)), {"x": x},
                         tol=tol.eps_res))
    valid = _away(xs, 1e-4) & _away(xt, 1e-4) & _away(xst, 1e-4)
    add = B.norm(B.odot(xt, xs, ep) - xst)
    out.append(summarize("power_addition", dim, add, {"x": x, "s": s, "t": t}, tol=tol.eps_res,
                         mask=valid))

    T = np.pi / np.where(generic, a, 1.0)
    s_in = u * T
    comp = B.norm(B.power(B.power(x, s_in, ep), t, ep) - B.power(x, s_in * t, ep))
    out.append(summarize("power_composition", dim, comp, {"x": x, "s": s_in, "t": t},
                         tol=tol.eps_res, mask=generic))
    s_out = (1.0 + np.clip(u, 0.05, 0.95)) * T
    comp_out = B.norm(B.power(B.power(x, s_out, ep), t, ep) - B.power(x, s_out * t, ep))
    out.append(summarize("power_composition_outside", dim, comp_out, {"x": x, "s": s_out, "t": t},
                         tol=tol.eps_res, predicted_holds=False, mode="exists", threshold=1e-3,
                         mask=generic))

    Ls, Lt = B.left_translation(xs, ep), B.left_translation(xt, ep)
    half = B.power(x, (s + t) / 2.0, ep)
    op_form = B.reflection_about(half)
    op_form[..., :, 1:] *= -1.0
    ok = _away(xs, 1e-4) & _away(xt, 1e-4)
    out.append(summarize("lpa_operator", dim, B.max_abs(Ls @ Lt - op_form), {"x": x, "s": s, "t": t},
                         tol=tol.eps_res, mask=ok))
    out.append(summarize("lpa_translation", dim, B.max_abs(Ls @ Lt - B.left_translation(xst, ep)),
                         {"x": x, "s": s, "t": t}, tol=tol.eps_res, mask=valid))

    if dim >= 3:
        h = T / 2.0
        Lh = B.left_translation(B.power(x, h, ep), ep)
        at_anti = B.max_abs(Lh @ Lh - B.left_translation(B.power(x, 2.0 * h, ep), ep))
        out.append(summarize("lpa_translation_at_antipode", dim, at_anti, {"x": x, "s": h, "t": h},
                             tol=tol.eps_res, predicted_holds=False, mask=generic))

        Lx = B.left_translation(x, ep)
        la = B.max_abs(Lx @ Lx - B.left_translation(B.odot(x, x, ep), ep))
        off_v = np.abs(x[:, 0]) > 0.1
        out.append(summarize("left_alternative_off_V", dim, la, {"x": x}, tol=1e-10, mask=off_v))
        xv = x.copy()
        xv[:, 0] = 0.0
        xv = B.normalize(xv)
        Lv = B.left_translation(xv, ep)
        la_v = B.max_abs(Lv @ Lv - B.left_translation(B.odot(xv, xv, ep), ep))
        out.append(summarize("left_alternative_on_V", dim, la_v, {"x": xv}, tol=tol.eps_res,
                             predicted_holds=False))

    Lx = B.left_translation(x, ep)
    out.append(summarize("lpa2_commute", dim, B.max_abs(-Lx + Lx), {"x": x}, tol=tol.eps_res))
    neg = B.max_abs(-Lx - B.left_translation(-x, ep))
    out.append(summarize("lpa2_negation", dim, neg, {"x": x}, tol=tol.eps_res,
                         predicted_holds=dim < 3, mask=generic))

    A = B.left_inner(x, y, ep)
    Az = B.matvec(A, z)
    al2 = B.norm(B.power(Az, t, ep) - B.matvec(A, B.power(z, t, ep)))
    out.append(summarize("second_al", dim, al2, {"x": x, "y": y, "z": z, "t": t}, tol=tol.eps_res,
                         mask=_away(z, 1e-4) & _away(Az, 1e-4)))

    if dim >= 3:
        out.extend(_discontinuity(x, y, u, dim, generic, tol))
    return out


def _limit_operator(x) -> np.ndarray:
    d = B.normalize(B.perp(x))
    M = B.reflection_about(d)
    M[..., :, 1:] *= -1.0
    return M


def _discontinuity(x, y, u, dim, generic, tol) -> list[LawSummary]:
    ep = tol.eps_pole
    lim = _limit_operator(x)
    xp, yp = B.perp(x), B.perp(y)
    gram = B.dot(xp, xp) * B.dot(yp, yp) - B.dot(xp, yp) ** 2
    res = B.norm(B.matvec(lim, y) + y)
    out = [summarize("discontinuity_noncoplanar", dim, res, {"x": x, "y": y}, tol=tol.eps_res,
                     predicted_holds=False, mask=generic & (gram > 100 * tol.eps_res))]
    phi = np.pi * u
    yc = np.cos(phi)[:, None] * _e0(len(x), dim) + np.sin(phi)[:, None] * B.normalize(xp)
    out.append(summarize("discontinuity_coplanar", dim, B.norm(B.matvec(lim, yc) + yc),
                         {"x": x, "y": yc}, tol=tol.eps_res, mask=generic))

    # L_{x^t} -> limit as t -> pi / arccos(x0): gaps shrink monotonically and linearly
    a = B.angle_from_e0(x)
    T = np.pi / np.where(generic, a, 1.0)
    fr = 10.0 ** -np.arange(1, 7)
    ts = T[:, None] * (1.0 - fr[None, :])
    xt = B.power(x[:, None, :], ts, ep)
    gaps = B.max_abs(B.left_translation(xt, ep) - lim[:, None])
    increase = np.max(np.maximum(np.diff(gaps, axis=1), 0.0), axis=1)
    out.append(summarize("limit_monotone", dim, increase, {"x": x}, tol=tol.eps_res, mask=generic,
                         notes={"t_fractions": fr.tolist()}))
    rate = gaps / (T[:, None] - ts)
    out.append(summarize("limit_rate", dim, np.abs(rate[:, -2] / rate[:, -1] - 1.0), {"x": x},
                         tol=1e-3, mask=generic))
    out.append(summarize("limit_gap", dim, gaps[:, -1], {"x": x}, tol=1e-2, mask=generic))
    return out


def bol_prediction_batch(x, y, tol: Tolerances) -> np.ndarray:
    ep = tol.eps_pole
    dim = x.shape[-1]
    n = len(x)
    if dim < 3:
        return np.ones(n, dtype=bool)
    xpole = ~_away(x, ep) | (B.norm(x - _e0(n, dim)) <= ep)
    yanti = ~_away(y, ep)
    special = B.norm(y + B.power(x, -2.0, ep)) <= tol.eps_res
    family = B.norm(B.odot(y, x, ep) + B.apply_J(x)) <= tol.eps_res
    return xpole | ~(yanti | (~special & family))


def _bol_residual(x, y, ep) -> np.ndarray:
    Lx = B.left_translation(x, ep)
    rhs = B.left_translation(B.odot(x, B.odot(y, x, ep), ep), ep)
    return B.max_abs(Lx @ B.left_translation(y, ep) @ Lx - rhs)


def suite_bol(cfg: VerifyConfig, dim: int) -> list[LawSummary]:
    tol = cfg.tol
    ep = tol.eps_pole

    def draw(rng):
        x, y, w = _pts(rng, dim, 3, tol)
        return {"x": x, "y": y, "w": w}

    d = draw_samples(cfg, "bol", dim, draw)
    x, y, w = d["x"], d["y"], d["w"]
    n = len(x)
    out = []
    pred = bol_prediction_batch(x, y, tol)
    near = B.norm(B.odot(y, x, ep) + B.apply_J(x)) <= MARGIN
    res = _bol_residual(x, y, ep)
    out.append(summarize("bol", dim, res, {"x": x, "y": y}, tol=tol.eps_res, mask=pred & ~near,
                         notes={"predicted_failures": int((~pred).sum())}))

    if dim >= 3:
        generic = _away(x, 1e-3) & (B.norm(x - _e0(n, dim)) > 1e-3)
        anti = -_e0(n, dim)
        out.append(summarize("no_bol_antipode", dim, _bol_residual(x, anti, ep), {"x": x, "y": anti},
                             tol=tol.eps_res, predicted_holds=False, mask=generic))
        # y on the sphere {<y, x^-1> = -x0}, i.e. y odot x = -x^-1
        b = B.apply_J(x)
        wp = w - B.dot(w, b)[:, None] * b
        wp = B.normalize(wp)
        yf = -x[:, :1] * b + np.sqrt(np.maximum(0.0, 1.0 - x[:, :1] ** 2)) * wp
        fam_ok = generic & (B.norm(yf + B.power(x, -2.0, ep)) > 1e-6) & _away(yf, 1e-6)
        out.append(summarize("no_bol_family", dim, _bol_residual(x, yf, ep), {"x": x, "y": yf},
                             tol=tol.eps_res, predicted_holds=False, mask=fam_ok,
                             notes={"family_defect": float(np.max(B.norm(B.odot(yf, x, ep) + b)))}))

        # x odot a = -a^-1 has a (dim-2)-sphere of solutions, so (S, odot) is not a loop
        sol = B.norm(B.odot(yf, x, ep) + b)
        out.append(summarize("not_loop_solutions", dim, sol, {"a": x, "x": yf}, tol=tol.eps_res,
                             mask=generic, notes={"solution_dimension": dim - 2}))
    return out


def _slerp(x, y, t) -> np.ndarray:
    c = B.dot(x, y)
    w = y - c[..., None] * x
    nw = B.norm(w)
    w = w / np.where(nw == 0.0, 1.0, nw)[..., None]
    om = np.arctan2(nw, c)
    return np.cos(t * om)[..., None] * x + np.sin(t * om)[..., None] * w


def _dist(x, y) -> np.ndarray:
    return 2.0 * np.arctan2(B.norm(x - y), B.norm(x + y))


def _norm_s(x) -> np.ndarray:
    e = np.zeros(x.shape[-1])
    e[0] = 1.0
    return _dist(x, e)


def suite_metric(cfg: VerifyConfig, dim: int) -> list[LawSummary]:
    tol = cfg.tol
    ep = tol.eps_pole

    def draw(rng):
        x, y, z = _pts(rng, dim, 3, tol)
        return {"x": x, "y": y, "z": z, "gA": rng.standard_normal((dim - 1, dim - 1)),
                "phi": rng.uniform(0.0, np.pi), "t": rng.uniform(-4.0, 4.0)}

    d = draw_samples(cfg, "metric", dim, draw)
    x, y, z, phi, t = d["x"], d["y"], d["z"], d["phi"], d["t"]
    A = embed_V(orthogonal_from_gaussian(d["gA"]))
    n = len(x)
    out = []
    dxy = _dist(x, y)
    out.append(summarize("dist_symmetry", dim, np.abs(dxy - _dist(y, x)), {"x": x, "y": y}, tol=1e-12))
    via = _norm_s(B.odot(x, B.apply_J(y), ep))
    out.append(summarize("dist_via_loop", dim, np.abs(dxy - via), {"x": x, "y": y}, tol=tol.eps_res))
    tri = np.maximum(0.0, dxy - _dist(x, z) - _dist(z, y))
    out.append(summarize("triangle_inequality", dim, tri, {"x": x, "y": y, "z": z}, tol=tol.eps_res))
    Ax, Ay = B.matvec(A, x), B.matvec(A, y)
    ov = np.maximum(np.abs(_norm_s(Ax) - _norm_s(x)), np.abs(_dist(Ax, Ay) - dxy))
    out.append(summarize("OV_invariance", dim, ov, {"x": x, "y": y, "A": A}, tol=1e-12))
    ls = np.abs(_dist(B.odot(x, y, ep), B.odot(x, z, ep)) - _dist(y, z))
    out.append(summarize("LS_invariance", dim, ls, {"x": x, "y": y, "z": z}, tol=tol.eps_res))

    # the two-sided bound on ||x odot y||_s, on random pairs and positively parallel pairs
    yp = np.cos(phi)[:, None] * _e0(n, dim) + np.sin(phi)[:, None] * B.normalize(B.perp(x))
    X = np.concatenate([x, x])
    Y = np.concatenate([y, yp])
    nx, ny, nxy = _norm_s(X), _norm_s(Y), _norm_s(B.odot(X, Y, ep))
    bound = np.pi - np.abs(nx + ny - np.pi)
    first, second = bound - nxy, nx + ny - bound
    both = {"x": X, "y": Y}
    out.append(summarize("tri_first", dim, np.maximum(0.0, -first), both, tol=tol.eps_res))
    out.append(summarize("tri_second", dim, np.maximum(0.0, -second), both, tol=tol.eps_res))
    Xp, Yp = B.perp(X), B.perp(Y)
    gram = B.dot(Xp, Xp) * B.dot(Yp, Yp) - B.dot(Xp, Yp) ** 2
    equal = np.abs(first) <= tol.eps_res
    out.append(summarize("tri_equality_implies_coplanar", dim, gram, both, tol=10 * tol.eps_res,
                         mask=equal))
    out.append(summarize("tri_parallel_equality", dim, np.abs(first[n:]), {"x": x, "y": yp},
                         tol=tol.eps_res))
    anti = B.dot(Xp, Yp) < 0
    out[-1].notes["coplanar_strict"] = int(np.sum((gram <= tol.eps_res) & anti & ~equal))

    # fold law for norms of powers
    gen = _away(x, 1e-3) & (B.norm(x - _e0(n, dim)) > 1e-3)
    a = np.abs(t) * _norm_s(x)
    fold = np.abs(((a + np.pi) % (2 * np.pi)) - np.pi)
    out.append(summarize("norm_of_power", dim, np.abs(_norm_s(B.power(x, t, ep)) - fold),
                         {"x": x, "t": t}, tol=tol.eps_res, mask=gen))

    # lines agree with classical slerp
    ts = np.linspace(0.0, 1.0, 9)
    zl = B.odot(B.apply_J(x), y, ep)
    line_ok = _away(zl, 1e-3)
    gam = B.odot(x[:, None, :], B.power(zl[:, None, :], ts[None, :], ep), ep)
    ref = _slerp(x[:, None, :], y[:, None, :], ts[None, :])
    out.append(summarize("line_vs_slerp", dim, np.max(B.norm(gam - ref), axis=1), {"x": x, "y": y},
                         tol=tol.eps_res, mask=line_ok))

    # equidistant curves
    Jy = B.apply_J(y)
    yx = B.odot(y, x, ep)
    wb = B.odot(y, B.odot(B.apply_J(yx), y, ep), ep)
    pre = (B.norm(x + Jy) > 1e-4) & (B.norm(B.odot(yx, Jy, ep) + y) > 1e-4) & _away(wb, 1e-4)
    tq = np.linspace(0.0, 2.0, 9)
    nu = B.power(wb[:, None, :], tq[None, :], ep)
    eta = B.odot(nu, x[:, None, :], ep)
    eq = np.max(np.abs(_dist(eta, nu) - _norm_s(x)[:, None]), axis=1)
    out.append(summarize("equidistance", dim, eq, {"x": x, "y": y}, tol=tol.eps_res, mask=pre))
    ends = np.maximum(B.norm(eta[:, 0] - x), B.norm(eta[:, 4] - y))
    out.append(summarize("equi_endpoints", dim, ends, {"x": x, "y": y}, tol=tol.eps_res, mask=pre))
    return out


def _factor(G, ep):
    u = B.normalize(G[..., :, 0])
    return u, np.swapaxes(B.left_translation(u, ep), -1, -2) @ G


def _smul(x, A, y, Bm, ep):
    Ay = B.matvec(A, y)
    return B.odot(x, Ay, ep), B.left_inner(x, Ay, ep) @ A @ Bm


def suite_semidirect(cfg: VerifyConfig, dim: int) -> list[LawSummary]:
    tol = cfg.tol
    ep = tol.eps_pole

    def draw(rng):
        x, y, z = _pts(rng, dim, 3, tol)
        g = [rng.standard_normal((dim - 1, dim - 1)) for _ in range(3)]
        return {"x": x, "y": y, "z": z, "gA": g[0], "gB": g[1], "gC": g[2],
                "gG": rng.standard_normal((dim, dim)), "t": rng.uniform(-4.0, 4.0)}

    d = draw_samples(cfg, "semidirect", dim, draw)
    x, y, z, t = d["x"], d["y"], d["z"], d["t"]
    A, Bm, C = (embed_V(orthogonal_from_gaussian(d[k])) for k in ("gA", "gB", "gC"))
    G = orthogonal_from_gaussian(d["gG"])
    n = len(x)
    I = np.eye(dim)
    out = []

    def op(p, M):
        return B.left_translation(p, ep) @ M

    pq, PQ = _smul(x, A, y, Bm, ep)
    hom = B.max_abs(op(pq, PQ) - op(x, A) @ op(y, Bm))
    out.append(summarize("to_operator_multiplicative", dim, hom, {"x": x, "A": A, "y": y, "B": Bm},
                         tol=tol.eps_res))
    u, U = _factor(G, ep)
    rt = B.max_abs(op(u, U) - G)
    out.append(summarize("factorize_roundtrip", dim, rt, {"G": G}, tol=1e-10))
    ov = np.maximum(B.norm(U[..., :, 0] - _e0(n, dim)),
                    B.max_abs(np.swapaxes(U, -1, -2) @ U - I))
    out.append(summarize("factor_in_OV", dim, ov, {"G": G}, tol=tol.eps_res))
    u2, U2 = _factor(op(x, A), ep)
    refac = np.maximum(B.norm(u2 - x), B.max_abs(U2 - A))
    out.append(summarize("refactorize", dim, refac, {"x": x, "A": A}, tol=tol.eps_res))

    qr, QR = _smul(y, Bm, z, C, ep)
    l_pt, l_M = _smul(pq, PQ, z, C, ep)
    r_pt, r_M = _smul(x, A, qr, QR, ep)
    assoc = np.maximum(B.norm(l_pt - r_pt), B.max_abs(l_M - r_M))
    out.append(summarize("associativity", dim, assoc, {"x": x, "A": A, "y": y, "B": Bm, "z": z, "C": C},
                         tol=tol.eps_res))
    ix, iA = _factor(np.swapaxes(op(x, A), -1, -2), ep)
    e_pt, e_M = _smul(x, A, ix, iA, ep)
    inv = np.maximum(B.norm(e_pt - _e0(n, dim)), B.max_abs(e_M - I))
    out.append(summarize("inverse", dim, inv, {"x": x, "A": A}, tol=tol.eps_res))

    aut = B.norm(B.matvec(A, B.odot(x, y, ep)) - B.odot(B.matvec(A, x), B.matvec(A, y), ep))
    out.append(summarize("automorphism_OV", dim, aut, {"A": A, "x": x, "y": y}, tol=tol.eps_res))
    non_ov = B.norm(G[..., :, 0] - _e0(n, dim)) > 1e-3
    aut_g = B.norm(B.matvec(G, B.odot(x, y, ep)) - B.odot(B.matvec(G, x), B.matvec(G, y), ep))
    out.append(summarize("automorphism_witness_OH", dim, aut_g, {"G": G, "x": x, "y": y},
                         tol=tol.eps_res, predicted_holds=False, mode="exists", threshold=1e-3,
                         mask=non_ov))
    gen = _away(x, 1e-3) & (B.norm(x - _e0(n, dim)) > 1e-3)
    eqv = B.norm(B.power(B.matvec(A, x), t, ep) - B.matvec(A, B.power(x, t, ep)))
    out.append(summarize("scalar_equivariance", dim, eqv, {"A": A, "x": x, "t": t}, tol=tol.eps_res,
                         mask=gen))
    if dim >= 3:
        D = B.left_translation(x, ep) + I
        spec = np.linalg.norm(D, ord=2, axis=(-2, -1))
        out.append(summarize("transversal_gap_spectral", dim, np.maximum(0.0, 2.0 - spec), {"x": x},
                             tol=tol.eps_res, mask=gen, notes={"min_gap": float(spec[gen].min())}))
        mx = B.max_abs(D)
        out.append(summarize("transversal_gap_max", dim, np.maximum(0.0, 1.0 - mx), {"x": x},
                             tol=tol.eps_res, mask=gen, notes={"min_gap": float(mx[gen].min())}))
    return out


def suite_models(cfg: VerifyConfig) -> list[LawSummary]:
    from .models import complex_sphere as cs
    from .models import finite as fm
    from .models.riemann import riemann_odot, stereo_to_plane, stereo_to_sphere

    tol = cfg.tol
    ep = tol.eps_pole
    out = []

    def draw3(rng):
        x, y = _pts(rng, 3, 2, tol)
        return {"x": x, "y": y}

    d = draw_samples(cfg, "models", 3, draw3)
    x, y = d["x"], d["y"]
    rt = np.array([np.linalg.norm(stereo_to_sphere(stereo_to_plane(v, tol), tol).vec - v) for v in x])
    out.append(summarize("stereo_roundtrip", 3, rt, {"x": x}, tol=1e-10))
    xy = B.odot(x, y, ep)
    tr = np.array([
        np.linalg.norm(stereo_to_sphere(riemann_odot(stereo_to_plane(a, tol), stereo_to_plane(b, tol)),
                                        tol).vec - c)
        for a, b, c in zip(x, y, xy)])
    out.append(summarize("stereo_transfer", 3, tr, {"x": x, "y": y}, tol=tol.eps_res))

    def draw2(rng):
        x, y = _pts(rng, 2, 2, tol)
        return {"x": x, "y": y}

    d = draw_samples(cfg, "models", 2, draw2)
    x, y = d["x"], d["y"]
    zc = (x[:, 0] + 1j * x[:, 1]) * (y[:, 0] + 1j * y[:, 1])
    cg = B.norm(B.odot(x, y, ep) - np.stack([zc.real, zc.imag], axis=1))
    out.append(summarize("circle_group", 2, cg, {"x": x, "y": y}, tol=1e-12))

    def draw_c(rng):
        v = [random_sphere_point(4, rng) for _ in range(4)]
        return {k: p for k, p in zip("xyuv", v)}

    d = draw_samples(cfg, "models", 4, draw_c)

    def pair(a):
        return a[:, 0] + 1j * a[:, 1], a[:, 2] + 1j * a[:, 3]

    def cod(p, q):
        z0, z1 = cs.odot_arrays(p[0], p[1], q[0], q[1], ep)
        nrm = np.sqrt(np.abs(z0) ** 2 + np.abs(z1) ** 2)
        return z0 / nrm, z1 / nrm

    def cinv(p):
        x0, x1 = p
        zero = np.abs(x0) <= ep
        safe = np.where(zero, 1.0, x0)
        return np.where(zero, 0.0, np.conj(x0)), np.where(zero, -x1, -x1 * np.conj(x0) / safe)

    def cdist(p, q):
        return np.sqrt(np.abs(p[0] - q[0]) ** 2 + np.abs(p[1] - q[1]) ** 2)

    def cmat(p):
        c0 = cod(p, (np.ones_like(p[0]), np.zeros_like(p[0])))
        c1 = cod(p, (np.zeros_like(p[0]), np.ones_like(p[0])))
        return np.stack([np.stack([c0[0], c1[0]], -1), np.stack([c0[1], c1[1]], -1)], -2)

    def capply(M, p):
        v = np.einsum("...ij,...j->...i", M, np.stack(p, -1))
        return v[..., 0], v[..., 1]

    X, Y, U, V = (pair(d[k]) for k in "xyuv")
    inputs = {k: d[k] for k in "xyuv"}
    lip = np.maximum(cdist(cod(cinv(X), cod(X, Y)), Y), cdist(cod(X, cod(cinv(X), Y)), Y))
    out.append(summarize("complex_lip", None, lip, {"x": d["x"], "y": d["y"]}, tol=tol.eps_res))
    Lin = np.linalg.solve(cmat(cod(X, Y)), cmat(X) @ cmat(Y))
    al = cdist(capply(Lin, cod(U, V)), cod(capply(Lin, U), capply(Lin, V)))
    out.append(summarize("complex_a_l", None, al, inputs, tol=tol.eps_res))
    aip = cdist(cinv(cod(X, Y)), cod(cinv(X), cinv(Y)))
    out.append(summarize("complex_aip_witness", None, aip, {"x": d["x"], "y": d["y"]},
                         tol=tol.eps_res, predicted_holds=False, mode="exists", threshold=1e-3))
    solved = np.linalg.solve(cmat(X), np.stack([np.ones_like(X[0]), np.zeros_like(X[0])], -1)[..., None])[..., 0]
    cf = cdist(cinv(X), (solved[:, 0], solved[:, 1]))
    out.append(summarize("complex_inverse_closed_form", None, cf, {"x": d["x"]}, tol=tol.eps_res))

    ns = list(range(3, 16, 2))
    bad = []
    for n in ns:
        q = fm.zn_reflection(n)
        b = fm.quasigroup_to_bloop(q, 0)
        ok = fm.check_bloop_axioms(b, 0).holds() and fm.bloop_to_quasigroup(b, 0) == q
        bad.append(0.0 if ok else 1.0)
    out.append(summarize("zn_isotopy", None, bad, {"n": np.array(ns)}, tol=0.0))
    corpus = list(fm.left_keyes_distributive_corpus(4))
    lem = [0.0 if fm.square_root_lemma_holds(m) else 1.0 for m in corpus]
    out.append(summarize("square_root_lemma", None, lem, {"n": np.array([m.n for m in corpus])},
                         tol=0.0))
    mags = list(fm.magmas_with_involutive_rows(3))
    eqv = [0.0 if fm.is_point_reflection_structure(m) == fm.is_reflection_quasigroup(m) else 1.0
           for m in mags]
    out.append(summarize("point_reflection_equivalence", None, eqv, {"index": np.arange(len(mags))},
                         tol=0.0))
    return out


_PER_DIM = {"kikkawa": suite_kikkawa, "lpa": suite_lpa, "bol": suite_bol, "metric": suite_metric,
            "semidirect": suite_semidirect}


def run_suite(cfg: VerifyConfig, suite: str) -> list[LawSummary]:
    if suite == "models":
        return suite_models(cfg)
    fn = _PER_DIM[suite]
    return [s for dim in cfg.dims for s in fn(cfg, dim)]


def run_campaign(cfg: VerifyConfig) -> dict:
    """Run every selected suite; returns the report document."""
    suites = []
    for name in cfg.suites:
        laws = run_suite(cfg, name)
        suites.append({"suite": name, "passed": all(s.passed for s in laws),
                       "laws": [s.to_dict() for s in laws]})
    return {
        "schema": SCHEMA,
        "version": __version__,
        "config": cfg.to_dict(),
        "suites": suites,
        "passed": all(s["passed"] for s in suites),
    }


def dumps_report(doc: dict) -> str:
    # Python floats serialize with repr, the shortest exact round-trip form
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
