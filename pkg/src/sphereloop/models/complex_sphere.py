"""The complex 1-sphere {(x0, x1) in C^2 : |x0|^2 + |x1|^2 = 1} as a left loop.

Left translations are complex-linear, so L_x is a 2x2 complex matrix.
The two-sided inverse used here was derived by solving x odot y = (1, 0)
by hand; :func:`solve_inverse` recovers it with a linear solve as a cross-check:

    x^-1 = (conj(x0), -x1 conj(x0)/x0)   if x0 != 0
    x^-1 = (0, -x1)                      if x0 == 0
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..hilbert import DEFAULT_TOL, Tolerances

RENORMALIZE_LIMIT = 1e-6


@dataclass(frozen=True)
class ComplexPair:
    x0: complex
    x1: complex

    def __post_init__(self):
        x0, x1 = complex(self.x0), complex(self.x1)
        n = np.sqrt(abs(x0) ** 2 + abs(x1) ** 2)
        if abs(n - 1.0) > RENORMALIZE_LIMIT:
            raise DomainError(f"not a unit pair (norm {n!r})")
        object.__setattr__(self, "x0", x0 / n)
        object.__setattr__(self, "x1", x1 / n)

    @classmethod
    def identity(cls) -> "ComplexPair":
        return cls(1.0, 0.0)

    @classmethod
    def from_array(cls, a) -> "ComplexPair":
        return cls(a[0], a[1])

    def to_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1], dtype=complex)


def _zero(z: complex, tol: Tolerances) -> bool:
    return abs(z) <= tol.eps_pole


def odot_arrays(x0, x1, y0, y1, eps_pole: float = DEFAULT_TOL.eps_pole):
    """Vectorized complex odot on arrays of coordinates; returns (z0, z1) unnormalized."""
    x0, x1, y0, y1 = (np.asarray(v, dtype=complex) for v in (x0, x1, y0, y1))
    zero = np.abs(x0) <= eps_pole
    phase = np.where(zero, 1.0, x0 / np.where(zero, 1.0, np.conj(x0)))
    z0 = np.where(zero, -np.conj(x1) * y1, phase * (np.conj(x0) * y0 - np.conj(x1) * y1))
    z1 = np.where(zero, x1 * y0, x0 * y1 + x1 * y0)
    return z0, z1


def complex1_odot(x: ComplexPair, y: ComplexPair, tol: Tolerances = DEFAULT_TOL) -> ComplexPair:
    z0, z1 = odot_arrays(x.x0, x.x1, y.x0, y.x1, tol.eps_pole)
    return ComplexPair(complex(z0), complex(z1))


def complex1_inverse(x: ComplexPair, tol: Tolerances = DEFAULT_TOL) -> ComplexPair:
    if _zero(x.x0, tol):
        return ComplexPair(0.0, -x.x1)
    return ComplexPair(x.x0.conjugate(), -x.x1 * x.x0.conjugate() / x.x0)


def complex1_left_matrix(x: ComplexPair, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """The complex 2x2 matrix of y -> x odot y."""
    cols = [complex1_odot(x, ComplexPair(*e), tol).to_array() for e in ((1, 0), (0, 1))]
    return np.column_stack(cols)


def complex1_left_inner(x: ComplexPair, y: ComplexPair, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """L(x, y) = L_{x.y}^-1 L_x L_y (matrix inverse, so LIP is not assumed)."""
    Lxy = complex1_left_matrix(complex1_odot(x, y, tol), tol)
    return np.linalg.solve(Lxy, complex1_left_matrix(x, tol) @ complex1_left_matrix(y, tol))


def apply_matrix(M, x: ComplexPair) -> ComplexPair:
    return ComplexPair.from_array(np.asarray(M) @ x.to_array())


def random_pair(rng: np.random.Generator) -> ComplexPair:
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return ComplexPair(complex(v[0], v[1]), complex(v[2], v[3]))


def distance(x: ComplexPair, y: ComplexPair) -> float:
    return float(np.linalg.norm(x.to_array() - y.to_array()))


def lip_defect(x, y, tol: Tolerances = DEFAULT_TOL) -> float:
    """||x^-1 . (x . y) - y||."""
    return distance(complex1_odot(complex1_inverse(x, tol), complex1_odot(x, y, tol), tol), y)


def aip_defect(x, y, tol: Tolerances = DEFAULT_TOL) -> float:
    """||(x . y)^-1 - x^-1 . y^-1||."""
    lhs = complex1_inverse(complex1_odot(x, y, tol), tol)
    rhs = complex1_odot(complex1_inverse(x, tol), complex1_inverse(y, tol), tol)
    return distance(lhs, rhs)


def al_defect(x, y, u, v, tol: Tolerances = DEFAULT_TOL) -> float:
    """||L(x,y)(u . v) - L(x,y)u . L(x,y)v||."""
    A = complex1_left_inner(x, y, tol)
    lhs = apply_matrix(A, complex1_odot(u, v, tol))
    rhs = complex1_odot(apply_matrix(A, u), apply_matrix(A, v), tol)
    return distance(lhs, rhs)


def find_aip_counterexample(rng: np.random.Generator, trials: int = 1000, threshold: float = 1e-3,
                            tol: Tolerances = DEFAULT_TOL):
    """Random search for (x, y) with AIP defect above ``threshold``; None if not found."""
    for _ in range(trials):
        x, y = random_pair(rng), random_pair(rng)
        d = aip_defect(x, y, tol)
        if d > threshold:
            return x, y, d
    return None


def solve_inverse(x: ComplexPair, tol: Tolerances = DEFAULT_TOL) -> ComplexPair:
    """Numerically solve x odot y = (1, 0), using that y -> x odot y is linear."""
    y = np.linalg.solve(complex1_left_matrix(x, tol), np.array([1.0, 0.0], dtype=complex))
    return ComplexPair.from_array(y)
