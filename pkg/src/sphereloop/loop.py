"""The left loop (S, odot) on the unit sphere and its companion operations.

Points are wrapped in :class:`SpherePoint`, which validates the norm and
caches whether the point is the identity e0, the antipode -e0, or generic.
Operations accept a SpherePoint or anything array-like.
"""

from __future__ import annotations

import enum

import numpy as np

from . import batch
from .errors import DimensionError, DomainError, NoCanonicalRootError
from .hilbert import DEFAULT_TOL, Tolerances, as_vector, frozen

# a point further than this from the unit sphere is rejected, not renormalized
RENORMALIZE_LIMIT = 1e-6


class PoleClass(enum.Enum):
    IDENTITY = "identity"
    ANTIPODE = "antipode"
    GENERIC = "generic"


def classify(v, tol: Tolerances = DEFAULT_TOL) -> PoleClass:
    if batch.antipode_mask(v, tol.eps_pole):
        return PoleClass.ANTIPODE
    if batch.identity_mask(v, tol.eps_pole):
        return PoleClass.IDENTITY
    return PoleClass.GENERIC


class SpherePoint:
    """Immutable unit vector in R^dim with a cached pole classification."""

    __slots__ = ("vec", "pole")

    def __init__(self, coords, tol: Tolerances = DEFAULT_TOL):
        v = as_vector(coords, copy=True)
        n = float(np.linalg.norm(v))
        if abs(n - 1.0) > RENORMALIZE_LIMIT:
            raise DomainError(f"not a unit vector (norm {n!r})")
        if n != 1.0:
            v /= n
        object.__setattr__(self, "vec", frozen(v))
        object.__setattr__(self, "pole", classify(v, tol))

    def __setattr__(self, name, value):
        raise AttributeError("SpherePoint is immutable")

    @classmethod
    def identity(cls, dim: int) -> "SpherePoint":
        v = np.zeros(dim)
        v[0] = 1.0
        return cls(v)

    @classmethod
    def antipode(cls, dim: int) -> "SpherePoint":
        v = np.zeros(dim)
        v[0] = -1.0
        return cls(v)

    @property
    def dim(self) -> int:
        return self.vec.shape[0]

    @property
    def x0(self) -> float:
        return float(self.vec[0])

    @property
    def perp(self) -> np.ndarray:
        return batch.perp(self.vec)

    @property
    def is_antipode(self) -> bool:
        return self.pole is PoleClass.ANTIPODE

    @property
    def is_identity(self) -> bool:
        return self.pole is PoleClass.IDENTITY

    def __array__(self, dtype=None, copy=None):
        return np.array(self.vec, dtype=dtype)

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.vec)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.vec.tolist())

    def __repr__(self) -> str:
        coords = ", ".join(f"{c:.6g}" for c in self.vec)
        return f"SpherePoint([{coords}], {self.pole.value})"

    def isclose(self, other, atol: float = 1e-9) -> bool:
        other = np.asarray(other, dtype=np.float64)
        return other.shape == self.vec.shape and float(np.linalg.norm(self.vec - other)) <= atol


def point(x, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """Coerce ``x`` to a SpherePoint."""
    return x if isinstance(x, SpherePoint) else SpherePoint(x, tol)


def _pair(x, y, tol):
    x, y = point(x, tol), point(y, tol)
    if x.dim != y.dim:
        raise DimensionError(f"dimension mismatch: {x.dim} vs {y.dim}")
    return x, y


def symm(x, y, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """Symmetric-space product x * y = 2<x,y> x - y."""
    x, y = _pair(x, y, tol)
    return SpherePoint(batch.symm(x.vec, y.vec), tol)


def sqrt_point(x, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    x = point(x, tol)
    if x.is_antipode:
        raise NoCanonicalRootError("-e0 has no canonical square root")
    return SpherePoint(batch.sqrt_point(x.vec, tol.eps_pole), tol)


def inverse(x, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """x^-1 = J x."""
    return SpherePoint(batch.apply_J(point(x, tol).vec), tol)


def odot(x, y, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    x, y = _pair(x, y, tol)
    if x.is_antipode:
        return SpherePoint(-y.vec, tol)
    return SpherePoint(batch.odot(x.vec, y.vec, tol.eps_pole), tol)


def odot_alt(x, y, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """The coordinate formula for x odot y; undefined for x = -e0."""
    x, y = _pair(x, y, tol)
    if x.is_antipode:
        raise DomainError("the coordinate formula is undefined at x = -e0")
    return SpherePoint(batch.odot_alt(x.vec, y.vec, tol.eps_pole), tol)


def power(x, t: float, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """Real power x^t along the great circle through e0 and x."""
    x = point(x, tol)
    if x.is_antipode:
        raise DomainError("x^t is undefined at x = -e0")
    if x.is_identity:
        return SpherePoint.identity(x.dim)
    return SpherePoint(batch.power(x.vec, float(t), tol.eps_pole), tol)


def left_translation(x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Matrix of L_x : y -> x odot y."""
    x = point(x, tol)
    if x.is_antipode:
        return -np.eye(x.dim)
    return batch.left_translation(x.vec, tol.eps_pole)


def right_translate(y, x, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """R_y(x) = x odot y."""
    return odot(x, y, tol)


def left_inner(x, y, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """L(x, y) = L_{x odot y}^T L_x L_y, an element of O(V)."""
    x, y = _pair(x, y, tol)
    xy = odot(x, y, tol)
    return left_translation(xy, tol).T @ left_translation(x, tol) @ left_translation(y, tol)


def compat_residual(x, y, tol: Tolerances = DEFAULT_TOL) -> float:
    """||x * y - x odot (x odot y^-1)||."""
    x, y = _pair(x, y, tol)
    lhs = symm(x, y, tol).vec
    rhs = odot(x, odot(x, inverse(y, tol), tol), tol).vec
    return float(np.linalg.norm(lhs - rhs))


def apply(A, x, tol: Tolerances = DEFAULT_TOL) -> SpherePoint:
    """Image of a sphere point under an orthogonal operator."""
    x = point(x, tol)
    return SpherePoint(np.asarray(A, dtype=np.float64) @ x.vec, tol)
