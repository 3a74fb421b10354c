"""Ambient linear algebra on R^dim = R e0 + V.

Vectors are 1-D float64 numpy arrays, operators are 2-D float64 arrays.
Index 0 is the e0 coordinate; indices 1..dim-1 span V.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, DimensionError, GeneratorError

MAX_DRAWS = 10**6


@dataclass(frozen=True)
class Tolerances:
    """Explicit numerical slacks, threaded through every predicate.

    eps_unit: allowed deviation of a sphere point's norm from 1.
    eps_pole: radius around +/-e0 inside which a point is classified as a pole.
    eps_op: entrywise slack for matrix identities such as A^T A = I.
    eps_res: pass threshold for identity residuals.
    """

    eps_unit: float = 1e-12
    eps_pole: float = 1e-10
    eps_op: float = 1e-10
    eps_res: float = 1e-9

    def __post_init__(self):
        for name in ("eps_unit", "eps_pole", "eps_op", "eps_res"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_TOL = Tolerances()


def as_vector(x, *, copy: bool = False) -> np.ndarray:
    """Coerce ``x`` to a finite float64 vector of length >= 2."""
    v = np.array(x, dtype=np.float64, copy=copy) if copy else np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 2:
        raise DimensionError(f"expected a vector of length >= 2, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def frozen(a: np.ndarray) -> np.ndarray:
    """Return a read-only copy of ``a``."""
    out = np.array(a, dtype=np.float64)
    out.setflags(write=False)
    return out


def check_same_dim(*vs) -> int:
    dims = {np.shape(v)[-1] for v in vs}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def basis(dim: int, i: int = 0) -> np.ndarray:
    v = np.zeros(dim)
    v[i] = 1.0
    return v


def e0(dim: int) -> np.ndarray:
    return basis(dim, 0)


def split(x) -> tuple[float, np.ndarray]:
    """Return ``(x0, x_perp)`` with x_perp embedded in R^dim (first entry zero)."""
    x = np.asarray(x, dtype=np.float64)
    perp = x.copy()
    perp[..., 0] = 0.0
    return x[..., 0], perp


def inner(x, y) -> float:
    check_same_dim(x, y)
    return float(np.dot(x, y))


def apply_J(x) -> np.ndarray:
    """J x = x0 e0 - x_perp."""
    out = np.array(x, dtype=np.float64)
    out[..., 1:] *= -1.0
    return out


def J_matrix(dim: int) -> np.ndarray:
    d = -np.ones(dim)
    d[0] = 1.0
    return np.diag(d)


def outer(a, b) -> np.ndarray:
    """The operator ab^T, i.e. x -> <b, x> a."""
    return np.outer(a, b)


def projector(a) -> np.ndarray:
    """Orthogonal projection onto the line R a."""
    a = np.asarray(a, dtype=np.float64)
    nrm2 = float(np.dot(a, a))
    if not nrm2 > 0.0:
        raise DegenerateInputError("projector onto the zero vector is undefined")
    return np.outer(a, a) / nrm2


def max_norm(a) -> float:
    """Entrywise max-abs norm; used for every matrix residual."""
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def is_orthogonal(A, fix_e0: bool = False, tol: Tolerances = DEFAULT_TOL) -> bool:
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    if not np.all(np.isfinite(A)):
        return False
    n = A.shape[0]
    if max_norm(A.T @ A - np.eye(n)) > tol.eps_op:
        return False
    if fix_e0 and np.linalg.norm(A[:, 0] - e0(n)) > tol.eps_op:
        return False
    return True


def gram_det(a, b) -> float:
    """Gram determinant |a|^2 |b|^2 - <a, b>^2 (zero iff a, b are parallel)."""
    aa, bb, ab = float(np.dot(a, a)), float(np.dot(b, b)), float(np.dot(a, b))
    return max(0.0, aa * bb - ab * ab)


# -- random generation -------------------------------------------------------
#
# All randomness flows through numpy's PCG64 bit generator seeded by a
# SeedSequence, so a (seed, sample-index) pair names a reproducible stream.


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Independent PCG64 stream for ``seed`` and an optional key path."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, keys)])))


def random_sphere_point(dim: int, rng: np.random.Generator, exclude_pole: bool = False,
                        tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Uniform point on the unit sphere of R^dim (normalized Gaussian)."""
    if dim < 2:
        raise DimensionError("dim must be >= 2")
    for _ in range(MAX_DRAWS):
        v = rng.standard_normal(dim)
        nrm = np.linalg.norm(v)
        if nrm == 0.0:
            continue
        v /= nrm
        if exclude_pole and not (1.0 + v[0] > tol.eps_pole * 1e3):
            continue
        return v
    raise GeneratorError(f"no admissible sample after {MAX_DRAWS} draws")


def random_sphere_points(n: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` uniform sphere points as an (n, dim) array."""
    v = rng.standard_normal((n, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def orthogonal_from_gaussian(g) -> np.ndarray:
    """Haar orthogonal matrices from Gaussian ones via QR with sign correction (batched)."""
    q, r = np.linalg.qr(np.asarray(g, dtype=np.float64))
    d = np.sign(np.diagonal(r, axis1=-2, axis2=-1))
    d = np.where(d == 0.0, 1.0, d)
    return q * d[..., None, :]


def embed_V(Q) -> np.ndarray:
    """Block matrix diag(1, Q): extends operators on V to H fixing e0 (batched)."""
    Q = np.asarray(Q, dtype=np.float64)
    dim = Q.shape[-1] + 1
    A = np.zeros(Q.shape[:-2] + (dim, dim))
    A[..., 0, 0] = 1.0
    A[..., 1:, 1:] = Q
    return A


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed element of O(n)."""
    return orthogonal_from_gaussian(rng.standard_normal((n, n)))


def random_orthogonal_V(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random operator fixing e0 exactly, orthogonal on V."""
    if dim < 2:
        raise DimensionError("dim must be >= 2")
    return embed_V(random_orthogonal(dim - 1, rng))
