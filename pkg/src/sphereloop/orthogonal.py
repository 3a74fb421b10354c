"""O(H) as the semidirect product S x| O(V).

Every orthogonal A factors uniquely as A = L_u U with u = A e0 and U in
O(V).  Pairs (x, A) multiply by (x, A)(y, B) = (x odot Ay, L(x, Ay) A B),
and (x, A) -> L_x A is an isomorphism onto O(H).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, PreconditionError
from .hilbert import DEFAULT_TOL, Tolerances, is_orthogonal, max_norm
from .loop import SpherePoint, left_inner, left_translation, odot, power
from .loop import point as as_point


@dataclass(frozen=True)
class Factorization:
    u: SpherePoint
    U: np.ndarray

    def compose(self, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        return left_translation(self.u, tol) @ self.U


@dataclass(frozen=True)
class SemidirectElement:
    point: SpherePoint
    auto: np.ndarray

    def __post_init__(self):
        p = as_point(self.point)
        A = np.array(self.auto, dtype=np.float64)
        if A.shape != (p.dim, p.dim):
            raise DimensionError(f"automorphism shape {A.shape} does not match dim {p.dim}")
        A.setflags(write=False)
        object.__setattr__(self, "point", p)
        object.__setattr__(self, "auto", A)

    @classmethod
    def identity(cls, dim: int) -> "SemidirectElement":
        return cls(SpherePoint.identity(dim), np.eye(dim))

    def validate(self, tol: Tolerances = DEFAULT_TOL) -> None:
        if not is_orthogonal(self.auto, fix_e0=True, tol=tol):
            raise DomainError("automorphism part is not in O(V)")


def factorize(A, tol: Tolerances = DEFAULT_TOL) -> Factorization:
    """Unique A = L_u U with u = A e0 and U = L_u^T A in O(V)."""
    A = np.asarray(A, dtype=np.float64)
    if not is_orthogonal(A, tol=tol):
        raise DomainError("factorize requires an orthogonal operator")
    u = SpherePoint(A[:, 0], tol)
    U = left_translation(u, tol).T @ A
    return Factorization(u, U)


def to_operator(p: SemidirectElement, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    return left_translation(p.point, tol) @ p.auto


def from_operator(A, tol: Tolerances = DEFAULT_TOL) -> SemidirectElement:
    f = factorize(A, tol)
    return SemidirectElement(f.u, f.U)


def semidirect_mul(p: SemidirectElement, q: SemidirectElement,
                   tol: Tolerances = DEFAULT_TOL) -> SemidirectElement:
    if p.point.dim != q.point.dim:
        raise DimensionError("dimension mismatch")
    Ay = SpherePoint(p.auto @ q.point.vec, tol)
    return SemidirectElement(odot(p.point, Ay, tol), left_inner(p.point, Ay, tol) @ p.auto @ q.auto)


def semidirect_inv(p: SemidirectElement, tol: Tolerances = DEFAULT_TOL) -> SemidirectElement:
    """Inverse element, obtained by refactorizing the transposed operator image."""
    return from_operator(to_operator(p, tol).T, tol)


def _require_OV(A, tol):
    if not is_orthogonal(A, fix_e0=True, tol=tol):
        raise DomainError("operator is not in O(V)")


def automorphism_residual(A, x, y, tol: Tolerances = DEFAULT_TOL, strict: bool = True) -> float:
    """||A(x odot y) - Ax odot Ay||.

    With ``strict=False`` any orthogonal A is accepted, which is how
    non-automorphism witnesses are searched for.
    """
    A = np.asarray(A, dtype=np.float64)
    if strict:
        _require_OV(A, tol)
    elif not is_orthogonal(A, tol=tol):
        raise DomainError("operator is not orthogonal")
    x, y = as_point(x, tol), as_point(y, tol)
    lhs = A @ odot(x, y, tol).vec
    rhs = odot(SpherePoint(A @ x.vec, tol), SpherePoint(A @ y.vec, tol), tol).vec
    return float(np.linalg.norm(lhs - rhs))


def scalar_equivariance_residual(A, x, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """||(Ax)^t - A x^t|| for A in O(V)."""
    A = np.asarray(A, dtype=np.float64)
    _require_OV(A, tol)
    x = as_point(x, tol)
    if x.is_antipode or x.is_identity:
        raise PreconditionError("x must not be +/-e0")
    lhs = power(SpherePoint(A @ x.vec, tol), t, tol).vec
    return float(np.linalg.norm(lhs - A @ power(x, t, tol).vec))


def transversal_gap(x, tol: Tolerances = DEFAULT_TOL, norm: str = "max") -> float:
    """Distance from L_x to L_{-e0} = -I.

    ``norm="max"`` is the entrywise max-abs norm (>= 1 whenever dim >= 3);
    ``norm="spectral"`` is the operator 2-norm, equal to 2 for dim >= 3.
    """
    x = as_point(x, tol)
    if x.is_antipode or x.is_identity:
        raise PreconditionError("x must not be +/-e0")
    D = left_translation(x, tol) + np.eye(x.dim)
    if norm == "max":
        return max_norm(D)
    if norm == "spectral":
        return float(np.linalg.norm(D, 2))
    raise ValueError(f"unknown norm {norm!r}")
