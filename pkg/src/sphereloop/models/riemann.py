"""The 2-sphere as the Riemann sphere C u {inf}.

The chart is stereographic projection from -e0,
z = (x1 + i x2) / (1 + x0), so e0 -> 0 and -e0 -> inf.  The point at
infinity is the singleton :data:`INF`; it is never a float infinity.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from ..batch import one_plus_x0
from ..errors import DimensionError
from ..hilbert import DEFAULT_TOL, Tolerances
from ..loop import SpherePoint, point


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtendedComplex = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_extended(z) -> ExtendedComplex:
    if z is INF:
        return INF
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError("finite extended-complex values must have finite coordinates; use INF")
    return z


def reciprocal(z: ExtendedComplex) -> ExtendedComplex:
    """1/z with 1/0 = inf and 1/inf = 0."""
    if z is INF:
        return 0j
    if z == 0:
        return INF
    return 1.0 / z


def conj(z: ExtendedComplex) -> ExtendedComplex:
    return INF if z is INF else z.conjugate()


def neg(z: ExtendedComplex) -> ExtendedComplex:
    return INF if z is INF else -z


def riemann_odot(x, y) -> ExtendedComplex:
    """x odot y = (x + y)/(1 - conj(x) y), -1/conj(y) if x = inf, -1/conj(x) if y = inf."""
    x, y = as_extended(x), as_extended(y)
    if x is INF:
        return neg(reciprocal(conj(y)))
    if y is INF:
        return neg(reciprocal(conj(x)))
    den = 1.0 - x.conjugate() * y
    if den == 0:
        return INF
    z = (x + y) / den
    # a denormal denominator overflows; the limit is the point at infinity
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        return INF
    return z


def stereo_to_plane(x, tol: Tolerances = DEFAULT_TOL) -> ExtendedComplex:
    x = point(x, tol)
    if x.dim != 3:
        raise DimensionError("stereographic projection needs dim = 3")
    if x.is_antipode:
        return INF
    v = x.vec
    return complex(v[1], v[2]) / float(one_plus_x0(v))


def stereo_to_sphere(z, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    z = as_extended(z)
    if z is INF:
        return SpherePoint.antipode(3)
    if abs(z) <= 1.0:
        r = abs(z) ** 2
        return SpherePoint([(1.0 - r) / (1.0 + r), 2.0 * z.real / (1.0 + r), 2.0 * z.imag / (1.0 + r)],
                           tol)
    # large |z|: work with w = 1/z so |z|^2 never overflows
    w = 1.0 / z
    r = abs(w) ** 2
    return SpherePoint([(r - 1.0) / (r + 1.0), 2.0 * w.real / (r + 1.0), -2.0 * w.imag / (r + 1.0)], tol)
