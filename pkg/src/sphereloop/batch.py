"""Vectorized kernels for the sphere operations.

Every function takes arrays whose last axis is the ambient coordinate axis
and broadcasts over leading axes.  These are the only implementations of
the formulas; the point-wise API in :mod:`sphereloop.loop` wraps them, and
Monte Carlo sweeps call them directly on (n, dim) batches.

Antipode handling uses a boolean mask computed with ``eps_pole``; inputs
that need a non-antipodal first argument yield NaN rows there and the
caller decides whether that is an error.
"""

from __future__ import annotations

import numpy as np

_EPS_POLE = 1e-10


def _f(a) -> np.ndarray:
    return np.asarray(a, dtype=np.float64)


def dot(a, b) -> np.ndarray:
    return np.einsum("...i,...i->...", _f(a), _f(b))


def norm(a) -> np.ndarray:
    return np.linalg.norm(_f(a), axis=-1)


def normalize(a) -> np.ndarray:
    a = _f(a)
    return a / np.linalg.norm(a, axis=-1, keepdims=True)


def apply_J(x) -> np.ndarray:
    out = np.array(x, dtype=np.float64)
    out[..., 1:] *= -1.0
    return out


def perp(x) -> np.ndarray:
    out = np.array(x, dtype=np.float64)
    out[..., 0] = 0.0
    return out


def plus_e0(x) -> np.ndarray:
    out = np.array(x, dtype=np.float64)
    out[..., 0] += 1.0
    return out


def one_plus_x0(x) -> np.ndarray:
    """1 + x0 for unit x, as ||x_perp||^2 / (1 - x0) when x0 < 0 to avoid cancellation."""
    x = _f(x)
    x0 = x[..., 0]
    pp = dot(x[..., 1:], x[..., 1:])
    neg = x0 < 0.0
    return np.where(neg, pp / np.where(neg, 1.0 - x0, 1.0), 1.0 + x0)


def half_vector(x) -> np.ndarray:
    """e0 + x with the e0 component from :func:`one_plus_x0`."""
    out = np.array(x, dtype=np.float64)
    out[..., 0] = one_plus_x0(out)
    return out


def antipode_mask(x, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """True where ||x + e0|| <= eps_pole."""
    return norm(plus_e0(x)) <= eps_pole


def identity_mask(x, eps_pole: float = _EPS_POLE) -> np.ndarray:
    y = np.array(x, dtype=np.float64)
    y[..., 0] -= 1.0
    return norm(y) <= eps_pole


def _safe_div(num, den):
    den = np.where(den == 0.0, np.nan, den)
    return num / den


def symm(x, y) -> np.ndarray:
    """x * y = 2<x,y> x - y."""
    x, y = np.broadcast_arrays(_f(x), _f(y))
    return normalize(2.0 * dot(x, y)[..., None] * x - y)


def sqrt_point(x, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """(e0 + x)/||e0 + x||; NaN rows at the antipode."""
    w = half_vector(x)
    n = norm(w)
    n = np.where(antipode_mask(x, eps_pole), np.nan, n)
    return w / n[..., None]


def odot(x, y, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """Operator form: (2 P_u - I) J y with u = x^(1/2), and -y at the antipode."""
    x, y = np.broadcast_arrays(_f(x), _f(y))
    anti = antipode_mask(x, eps_pole)
    w = half_vector(x)
    w[anti] = 0.0
    w[anti, 0] = 1.0
    u = w / norm(w)[..., None]
    Jy = apply_J(y)
    out = 2.0 * dot(u, Jy)[..., None] * u - Jy
    out = np.where(anti[..., None], -y, out)
    return normalize(out)


def odot_alt(x, y, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """Coordinate form <x,Jy> e0 + (y0 + <x,Jy>)/(1 + x0) x_perp + y_perp.

    Undefined (NaN) where x is the antipode.
    """
    x, y = np.broadcast_arrays(_f(x), _f(y))
    c = dot(x, apply_J(y))
    den = np.where(antipode_mask(x, eps_pole), np.nan, one_plus_x0(x))
    # (y0 + <x,Jy>)/(1+x0) rewritten as y0 - <x_perp,y_perp>/(1+x0): no cancellation near -e0
    coef = y[..., 0] - dot(x[..., 1:], y[..., 1:]) / den
    out = coef[..., None] * perp(x) + perp(y)
    out[..., 0] = c
    return normalize(out)


def angle_from_e0(x) -> np.ndarray:
    """arccos(x0) for unit x, evaluated as atan2(||x_perp||, x0)."""
    x = _f(x)
    return np.arctan2(norm(perp(x)), x[..., 0])


def power(x, t, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """x^t = cos(t a) e0 + sin(t a) x_perp/||x_perp||, a = arccos x0.

    e0^t = e0; NaN rows at the antipode.
    """
    x = _f(x)
    t = _f(t)
    xp = perp(x)
    nperp = norm(xp)
    a = np.arctan2(nperp, x[..., 0])
    at = t * a
    at = np.broadcast_to(at, np.broadcast_shapes(at.shape, nperp.shape))
    ident = (nperp < eps_pole) & (x[..., 0] > 0.0)
    direction = xp / np.where(ident | (nperp == 0.0), 1.0, nperp)[..., None]
    out = np.sin(at)[..., None] * direction
    out = np.array(np.broadcast_to(out, at.shape + x.shape[-1:]))
    out[..., 0] = np.cos(at)
    e = np.zeros(x.shape[-1])
    e[0] = 1.0
    out = np.where(np.broadcast_to(ident, at.shape)[..., None], e, out)
    out = np.where(np.broadcast_to(antipode_mask(x, eps_pole), at.shape)[..., None], np.nan, out)
    return normalize(out)


def reflection_about(u) -> np.ndarray:
    """2 P_u - I for unit u, shape (..., d, d)."""
    u = _f(u)
    d = u.shape[-1]
    return 2.0 * u[..., :, None] * u[..., None, :] - np.eye(d)


def left_translation(x, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """L_x = (2 P_{x^(1/2)} - I) J, and -I at the antipode; shape (..., d, d)."""
    x = _f(x)
    d = x.shape[-1]
    anti = antipode_mask(x, eps_pole)
    w = half_vector(x)
    w[anti] = 0.0
    w[anti, 0] = 1.0
    u = w / norm(w)[..., None]
    L = reflection_about(u)
    L[..., :, 1:] *= -1.0  # right-multiplication by J negates columns 1..d-1
    return np.where(anti[..., None, None], -np.eye(d), L)


def left_inner(x, y, eps_pole: float = _EPS_POLE) -> np.ndarray:
    """L(x, y) = L_{x.y}^T L_x L_y."""
    xy = odot(x, y, eps_pole)
    Lxy = left_translation(xy, eps_pole)
    return np.swapaxes(Lxy, -1, -2) @ left_translation(x, eps_pole) @ left_translation(y, eps_pole)


def matvec(A, v) -> np.ndarray:
    return np.einsum("...ij,...j->...i", _f(A), _f(v))


def max_abs(a, axes=(-2, -1)) -> np.ndarray:
    return np.max(np.abs(_f(a)), axis=axes)
