"""Exception types raised across the package."""


class PedoeError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatchError(PedoeError):
    """Operands live in different ambient dimensions."""


class ZeroVectorError(PedoeError):
    """A nonzero Minkowski vector is required."""


class SingularMatrixError(PedoeError):
    """Matrix is singular or too ill-conditioned to invert."""


class InconsistentSystemError(PedoeError):
    """Linear system admits no exact solution."""


class ImproperCircleError(PedoeError):
    """A point was passed where a circle or hyperplane is required."""


class ImaginaryCircleError(PedoeError):
    """Vector has positive Minkowski norm and represents no real sphere."""


class DisjointCirclesError(PedoeError):
    """Circles do not intersect, so no intersection angle exists."""


class NotTangentError(PedoeError):
    """Input circles are not mutually tangent as required."""


class DependentKnownsError(PedoeError):
    """Known spheres are linearly dependent; the completion is not unique."""


class NoRealSolutionError(PedoeError):
    """Constraint system has no real solution."""


class UnknownFamilyError(PedoeError):
    """Unrecognized configuration-family identifier."""


class UnsupportedRenderError(PedoeError):
    """Rendering is only available for planar (2D) input."""
