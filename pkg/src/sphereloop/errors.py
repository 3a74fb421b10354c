"""Exception hierarchy shared by every module of the package."""


class SphereLoopError(Exception):
    """Base class for all errors raised by sphereloop."""


class DimensionError(SphereLoopError, ValueError):
    """Operands live in different ambient dimensions, or the dimension is unsupported."""


class DegenerateInputError(SphereLoopError, ValueError):
    """Input is degenerate for the requested construction (e.g. a zero vector)."""


class DomainError(SphereLoopError, ValueError):
    """Input lies outside the domain on which an operation is defined."""


class PreconditionError(DomainError):
    """A law checker was called with inputs outside the hypotheses of its identity."""


class StructureError(SphereLoopError, ValueError):
    """A finite model does not satisfy the axioms required by an operation."""


class GeneratorError(SphereLoopError, RuntimeError):
    """Random generation failed to produce an admissible sample."""


class LawViolation(SphereLoopError, AssertionError):
    """A numerically observed value contradicts a predicted identity."""


class NoCanonicalRootError(DomainError):
    """The antipode -e0 has no distinguished square root."""
