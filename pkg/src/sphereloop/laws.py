"""Residual checkers for the identities of (S, odot).

Each checker returns an :class:`IdentityReport` carrying the measured
defect and whether the identity is predicted to hold for those inputs.
A report passes when the prediction is confirmed: a small residual for a
predicted identity, or a clearly large one (> 10 * tolerance) for a
predicted failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import DomainError, LawViolation, PreconditionError
from .hilbert import (DEFAULT_TOL, J_matrix, Tolerances, apply_J, gram_det, make_rng, max_norm,
                      projector)
from .loop import (SpherePoint, inverse, left_inner, left_translation, odot, point, power,
                   right_translate)

FAIL_FACTOR = 10.0


def _jsonable(v):
    if isinstance(v, SpherePoint):
        return v.vec.tolist()
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, (list, tuple)):
        return [_jsonable(w) for w in v]
    return v


@dataclass
class IdentityReport:
    name: str
    residual: float
    predicted_holds: bool
    witness: tuple
    tolerance: float
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.predicted_holds:
            return self.residual <= self.tolerance
        return self.residual > FAIL_FACTOR * self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": float(self.residual),
            "predicted_holds": bool(self.predicted_holds),
            "passed": self.passed,
            "tolerance": float(self.tolerance),
            "witness": _jsonable(self.witness),
            "extras": {k: _jsonable(v) for k, v in self.extras.items()},
        }


def _require_generic(x: SpherePoint, what: str = "x"):
    if x.is_antipode or x.is_identity:
        raise PreconditionError(f"{what} must not be +/-e0")


def _require_not_antipode(x: SpherePoint, what: str = "x"):
    if x.is_antipode:
        raise PreconditionError(f"{what} must not be -e0")


# -- left power alternative ----------------------------------------------------

def check_lpa(x, s: float, t: float, tol: Tolerances = DEFAULT_TOL) -> tuple[IdentityReport, IdentityReport]:
    """Left power alternative at x for exponents s, t.

    Returns two reports: the operator form L_{x^s} L_{x^t} = (2P_{x^((s+t)/2)} - I)J,
    which always holds, and L_{x^s} L_{x^t} = L_{x^(s+t)}, which holds exactly
    when x^(s+t) is not -e0.
    """
    x = point(x, tol)
    _require_generic(x)
    xs, xt = power(x, s, tol), power(x, t, tol)
    if xs.is_antipode or xt.is_antipode:
        raise PreconditionError("x^s and x^t must not be -e0")
    prod = left_translation(xs, tol) @ left_translation(xt, tol)
    half = power(x, (s + t) / 2.0, tol)
    op_form = (2.0 * projector(half.vec) - np.eye(x.dim)) @ J_matrix(x.dim)
    xst = power(x, s + t, tol)
    witness = (x, float(s), float(t))
    return (
        IdentityReport("lpa.operator_form", max_norm(prod - op_form), True, witness, tol.eps_res),
        IdentityReport("lpa.translation", max_norm(prod - left_translation(xst, tol)),
                       not xst.is_antipode, witness, tol.eps_res,
                       {"x_s_plus_t_is_antipode": xst.is_antipode}),
    )


def check_left_alternative(x, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    """L_x^2 = L_{x odot x}; fails exactly on the equator S cap V (dim >= 3)."""
    x = point(x, tol)
    if x.dim < 3:
        raise DomainError("the left alternative law always holds on the circle (dim 2)")
    Lx = left_translation(x, tol)
    res = max_norm(Lx @ Lx - left_translation(odot(x, x, tol), tol))
    return IdentityReport("left_alternative", res, abs(x.x0) > tol.eps_pole, (x,), tol.eps_res)


def check_lpa2(x, tol: Tolerances = DEFAULT_TOL) -> tuple[IdentityReport, IdentityReport]:
    """L_{-e0} L_x = L_x L_{-e0}, but L_x L_{-e0} != L_{-x} once dim >= 3."""
    x = point(x, tol)
    _require_generic(x)
    Lx = left_translation(x, tol)
    Lm = -np.eye(x.dim)
    comm = max_norm(Lm @ Lx - Lx @ Lm)
    neg = max_norm(Lx @ Lm - left_translation(-x, tol))
    return (
        IdentityReport("lpa2.commute", comm, True, (x,), tol.eps_res),
        IdentityReport("lpa2.negation", neg, x.dim < 3, (x,), tol.eps_res),
    )


# -- Bol identity --------------------------------------------------------------

def bol_prediction(x, y, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether L_x L_y L_x = L_{x odot (y odot x)} is predicted to hold.

    Fails for dim >= 3, x != +/-e0, when y = -e0 or (y != -x^-2 and
    y odot x = -x^-1); predicted to hold everywhere else.
    """
    x, y = point(x, tol), point(y, tol)
    if x.dim < 3 or x.is_antipode or x.is_identity:
        return True
    if y.is_antipode:
        return False
    neg_inv_sq = -power(x, -2.0, tol).vec
    if np.linalg.norm(y.vec - neg_inv_sq) <= tol.eps_res:
        return True
    return not np.linalg.norm(odot(y, x, tol).vec + apply_J(x.vec)) <= tol.eps_res


def check_bol(x, y, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    x, y = point(x, tol), point(y, tol)
    Lx = left_translation(x, tol)
    rhs = left_translation(odot(x, odot(y, x, tol), tol), tol)
    res = max_norm(Lx @ left_translation(y, tol) @ Lx - rhs)
    return IdentityReport("bol", res, bol_prediction(x, y, tol), (x, y), tol.eps_res)


# -- the equation x odot a = -a^-1 ---------------------------------------------

def particular_solution(a, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """-a^-2, the solution of x odot a = -a^-1 lying on the circle through e0 and a."""
    return -power(a, -2.0, tol)


def solution_set_membership(a, x, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff x solves x odot a = -a^-1, via <x, a^-1> = -a0 and x != -e0."""
    a, x = point(a, tol), point(x, tol)
    _require_generic(a, "a")
    if x.is_antipode:
        return False
    return abs(float(np.dot(x.vec, apply_J(a.vec))) + a.x0) <= tol.eps_res


def solution_witnesses(a, count: int, rng: np.random.Generator,
                       tol: Tolerances = DEFAULT_TOL) -> list[SpherePoint]:
    """Random members of the solution set of x odot a = -a^-1.

    The set is the sphere {x : <x, b> = -a0} with b = a^-1, centered at
    -a0 b with radius sqrt(1 - a0^2), minus the point -e0.
    """
    a = point(a, tol)
    _require_generic(a, "a")
    b = apply_J(a.vec)
    center = -a.x0 * b
    radius = np.sqrt(max(0.0, 1.0 - a.x0 ** 2))
    out: list[SpherePoint] = []
    if a.dim == 2:
        return [particular_solution(a, tol)][:count]
    while len(out) < count:
        w = rng.standard_normal(a.dim)
        w -= np.dot(w, b) * b
        nw = np.linalg.norm(w)
        if nw < 1e-6:
            continue
        p = SpherePoint(center + radius * w / nw, tol)
        if not p.is_antipode:
            out.append(p)
    return out


def count_solution_dimension(a, rng: np.random.Generator | None = None,
                             tol: Tolerances = DEFAULT_TOL) -> int:
    """Dimension (dim - 2) of the solution sphere of x odot a = -a^-1.

    For dim >= 3 two distinct random members are drawn and checked against
    the equation itself; a failed check raises :class:`LawViolation`.
    """
    a = point(a, tol)
    _require_generic(a, "a")
    target = -apply_J(a.vec)
    if a.dim == 2:
        cands = [particular_solution(a, tol)]
    else:
        cands = solution_witnesses(a, 2, rng if rng is not None else make_rng(0), tol)
        if np.linalg.norm(cands[0].vec - cands[1].vec) <= tol.eps_res:
            raise LawViolation("sampled solutions coincide")
    for c in cands:
        if np.linalg.norm(odot(c, a, tol).vec - target) > tol.eps_res:
            raise LawViolation(f"{c!r} does not solve x odot a = -a^-1")
    return a.dim - 2


# -- Kikkawa consequences ------------------------------------------------------

def check_trans_ident(x, y, z, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    """(x.y) . (x.z)^-1 = L(x, y)(y . z^-1)."""
    x, y, z = point(x, tol), point(y, tol), point(z, tol)
    lhs = odot(odot(x, y, tol), inverse(odot(x, z, tol), tol), tol).vec
    rhs = left_inner(x, y, tol) @ odot(y, inverse(z, tol), tol).vec
    return IdentityReport("trans_ident", float(np.linalg.norm(lhs - rhs)), True, (x, y, z), tol.eps_res)


def check_second_Al(x, y, z, t: float, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    """(L(x,y) z)^t = L(x,y) z^t."""
    x, y, z = point(x, tol), point(y, tol), point(z, tol)
    _require_not_antipode(z, "z")
    A = left_inner(x, y, tol)
    Az = SpherePoint(A @ z.vec, tol)
    _require_not_antipode(Az, "L(x,y) z")
    res = float(np.linalg.norm(power(Az, t, tol).vec - A @ power(z, t, tol).vec))
    return IdentityReport("second_Al", res, True, (x, y, z, float(t)), tol.eps_res)


# -- continuity at -e0 ---------------------------------------------------------

def limit_right_translation(x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Limit of L_{x^t} as x^t runs into -e0 along its circle: (2 P_{x_perp} - I) J."""
    x = point(x, tol)
    _require_generic(x)
    return (2.0 * projector(x.perp) - np.eye(x.dim)) @ J_matrix(x.dim)


def limit_time(x, tol: Tolerances = DEFAULT_TOL) -> float:
    """The exponent pi / arccos(x0) at which x^t reaches -e0."""
    x = point(x, tol)
    _require_generic(x)
    return float(np.pi / np.arctan2(np.linalg.norm(x.perp), x.x0))


def coplanar_with_e0(x, y, tol: Tolerances = DEFAULT_TOL) -> bool:
    """x, y, e0 and 0 coplanar, tested as a vanishing Gram determinant of x_perp, y_perp."""
    x, y = point(x, tol), point(y, tol)
    return gram_det(x.perp, y.perp) <= tol.eps_res


def check_discontinuity(x, y, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    """Does lim L_{x^t} y agree with R_y(-e0) = -y?  Only in the coplanar case."""
    x, y = point(x, tol), point(y, tol)
    _require_generic(x)
    lim = limit_right_translation(x, tol) @ y.vec
    res = float(np.linalg.norm(lim + y.vec))
    g = gram_det(x.perp, y.perp)
    return IdentityReport("discontinuity", res, g <= tol.eps_res, (x, y), tol.eps_res,
                          {"gram_det": g})


def continuity_probe(x, y, h: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Largest difference quotient of R_y over tangent perturbations of size h at x."""
    x, y = point(x, tol), point(y, tol)
    _require_not_antipode(x)
    if not 0.0 < h < 0.1:
        raise DomainError("h must lie in (0, 0.1)")
    base = right_translate(y, x, tol).vec
    worst = 0.0
    for i in range(x.dim):
        v = -x.vec[i] * x.vec
        v[i] += 1.0
        nv = np.linalg.norm(v)
        if nv < 1e-8:
            continue
        xp = x.vec + h * v / nv
        xp /= np.linalg.norm(xp)
        moved = right_translate(y, xp, tol).vec
        worst = max(worst, float(np.linalg.norm(moved - base) / np.linalg.norm(xp - x.vec)))
    return worst
