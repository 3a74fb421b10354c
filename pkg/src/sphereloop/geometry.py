"""Spherical geometry expressed through the loop operation.

Angles are computed with atan2 forms rather than a bare arccos, which
keeps them accurate near 0 and pi where arccos loses half the digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .hilbert import DEFAULT_TOL, Tolerances, gram_det
from .laws import IdentityReport
from .loop import SpherePoint, inverse, odot, point, power


def norm_s(x, tol: Tolerances = DEFAULT_TOL) -> float:
    """Spherical norm arccos(x0), the angle between x and e0."""
    v = point(x, tol).vec
    e = np.zeros_like(v)
    e[0] = 1.0
    return float(2.0 * np.arctan2(np.linalg.norm(v - e), np.linalg.norm(v + e)))


def dist_s(x, y, tol: Tolerances = DEFAULT_TOL) -> float:
    """Spherical distance arccos<x, y>."""
    x, y = point(x, tol), point(y, tol)
    if x.dim != y.dim:
        raise DomainError("dimension mismatch")
    return float(2.0 * np.arctan2(np.linalg.norm(x.vec - y.vec), np.linalg.norm(x.vec + y.vec)))


def dist_via_loop(x, y, tol: Tolerances = DEFAULT_TOL) -> float:
    """||x odot y^-1||_s, the loop-theoretic definition of the distance."""
    return norm_s(odot(x, inverse(y, tol), tol), tol)


def triangle_bound(nx: float, ny: float) -> float:
    """pi - |nx + ny - pi|, the sharp upper bound for ||x odot y||_s."""
    return np.pi - abs(nx + ny - np.pi)


def triangle_report(x, y, tol: Tolerances = DEFAULT_TOL) -> IdentityReport:
    """Check ||x.y||_s <= pi - | ||x||_s + ||y||_s - pi | <= ||x||_s + ||y||_s.

    ``extras`` carries the slack of each inequality and the Gram determinant
    of (x_perp, y_perp) for the equality analysis.
    """
    x, y = point(x, tol), point(y, tol)
    nx, ny, nxy = norm_s(x, tol), norm_s(y, tol), norm_s(odot(x, y, tol), tol)
    bound = triangle_bound(nx, ny)
    extras = {
        "norm_xy": nxy,
        "bound": bound,
        "first_slack": bound - nxy,
        "second_slack": nx + ny - bound,
        "gram_det": gram_det(x.perp, y.perp),
        "perp_inner": float(np.dot(x.perp, y.perp)),
    }
    return IdentityReport("triangle", max(0.0, nxy - bound), True, (x, y), tol.eps_res, extras)


def fold_norm(t: float, theta: float) -> float:
    """Fold |t| theta into [0, pi] as arccos(cos(.)) does."""
    if not 0.0 <= theta < np.pi:
        raise DomainError("theta must lie in [0, pi)")
    a = abs(t) * theta
    return float(abs(((a + np.pi) % (2.0 * np.pi)) - np.pi))


def line_gamma(x, y, t: float, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """gamma(t) = x odot (x^-1 odot y)^t, the great circle with gamma(0)=x, gamma(1)=y."""
    x, y = point(x, tol), point(y, tol)
    if np.linalg.norm(x.vec + y.vec) <= tol.eps_pole:
        raise DomainError("antipodal points x = -y lie on no unique line")
    z = odot(inverse(x, tol), y, tol)
    if z.is_antipode:
        raise DomainError("x^-1 odot y is -e0; no unique line")
    return odot(x, power(z, t, tol), tol)


def slerp(x, y, t: float) -> np.ndarray:
    """Classical constant-speed great-circle interpolation (independent of the loop)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = y - np.dot(x, y) * x
    nw = np.linalg.norm(w)
    if nw == 0.0:
        return x.copy()
    w /= nw
    omega = np.arctan2(nw, np.dot(x, y))
    return np.cos(t * omega) * x + np.sin(t * omega) * w


def equi_base(x, y, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """Base point w = y odot ((y odot x)^-1 odot y) of the equidistant curve."""
    x, y = point(x, tol), point(y, tol)
    if np.linalg.norm(x.vec + inverse(y, tol).vec) <= tol.eps_pole:
        raise DomainError("precondition violated: x = -y^-1")
    yx = odot(y, x, tol)
    if np.linalg.norm(odot(yx, inverse(y, tol), tol).vec + y.vec) <= tol.eps_pole:
        raise DomainError("precondition violated: (y odot x) odot y^-1 = -y")
    w = odot(y, odot(inverse(yx, tol), y, tol), tol)
    if w.is_antipode:
        raise DomainError("precondition violated: base point w is -e0")
    return w


def equi_eta(x, y, t: float, tol: Tolerances = DEFAULT_TOL) -> tuple[SpherePoint, SpherePoint]:
    """(eta(t), nu(t)) with nu(t) = w^t and eta(t) = w^t odot x.

    eta passes through x (t=0) and y (t=1) and stays at distance ||x||_s
    from the line nu.
    """
    x = point(x, tol)
    w = equi_base(x, y, tol)
    nu = power(w, t, tol)
    return odot(nu, x, tol), nu


class CurveKind(enum.Enum):
    LINE = "line"
    EQUIDISTANT = "equi"
    BASE_LINE = "base"


@dataclass
class CurveSample:
    kind: CurveKind
    params: tuple
    ts: list[float]
    points: list[SpherePoint] = field(default_factory=list)


def sample_curve(kind: CurveKind, x, y, ts, tol: Tolerances = DEFAULT_TOL) -> CurveSample:
    x, y = point(x, tol), point(y, tol)
    ts = [float(t) for t in ts]
    if kind is CurveKind.LINE:
        pts = [line_gamma(x, y, t, tol) for t in ts]
    elif kind is CurveKind.EQUIDISTANT:
        pts = [equi_eta(x, y, t, tol)[0] for t in ts]
    else:
        w = equi_base(x, y, tol)
        pts = [power(w, t, tol) for t in ts]
    return CurveSample(kind, (x, y), ts, pts)
