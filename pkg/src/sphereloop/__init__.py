"""The global left loop (S, odot) on the unit sphere of R^n, with its laws,
the orthogonal-group factorization, spherical geometry and companion models."""

from .errors import (DegenerateInputError, DimensionError, DomainError, GeneratorError,
                     LawViolation, NoCanonicalRootError, PreconditionError, SphereLoopError,
                     StructureError)
from .hilbert import DEFAULT_TOL, Tolerances, apply_J, inner, is_orthogonal, make_rng, projector
from .laws import IdentityReport
from .loop import (PoleClass, SpherePoint, compat_residual, inverse, left_inner, left_translation,
                   odot, odot_alt, power, right_translate, sqrt_point, symm)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError", "DimensionError", "DomainError", "GeneratorError", "LawViolation",
    "NoCanonicalRootError", "PreconditionError", "SphereLoopError", "StructureError",
    "DEFAULT_TOL", "Tolerances", "apply_J", "inner", "is_orthogonal", "make_rng", "projector",
    "IdentityReport", "PoleClass", "SpherePoint", "compat_residual", "inverse", "left_inner",
    "left_translation", "odot", "odot_alt", "power", "right_translate", "sqrt_point", "symm",
    "__version__",
]
