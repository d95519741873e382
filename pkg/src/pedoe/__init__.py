"""Circle and sphere configurations through Minkowski-space coordinates.

Encode circles, (n-1)-spheres and hyperplanes as unit vectors of an
isotropic Minkowski space, build configuration (Gram) matrices, test
realizability of hypothetical arrangements, and solve for unknown spheres
under tangency, orthogonality and angle constraints (Descartes, Apollonius
and their generalizations in any dimension).
"""

from .configuration import (
    ConfigurationMatrix,
    DataMatrix,
    Realizability,
    data_matrix,
    dual_products,
    gram,
    master_residual,
    realizable,
)
from .errors import (
    DependentKnownsError,
    DimensionMismatchError,
    DisjointCirclesError,
    ImaginaryCircleError,
    ImproperCircleError,
    InconsistentSystemError,
    NoRealSolutionError,
    NotTangentError,
    PedoeError,
    SingularMatrixError,
    UnknownFamilyError,
    UnsupportedRenderError,
    ZeroVectorError,
)
from .geometry import (
    GeneralizedSphere,
    Hyperplane,
    PointShape,
    Sphere,
    darboux,
    intersection_angle,
    invert_in_unit_sphere,
    pedoe_product,
    pedoe_vector,
    point_ray,
    power_of_point,
    sphere_from_vector,
)
from .linalg import Inertia, SymMatrix, inertia, invert_symmetric, solve_affine
from .minkowski import (
    MVector,
    RayClass,
    classify_ray,
    from_orthonormal,
    inner,
    metric,
    metric_inverse,
    norm_sq,
    to_orthonormal,
)
from .solver import (
    ConstraintRow,
    SolveResult,
    apollonius,
    apollonius_all,
    complete_configuration,
    curvature_solve,
    family_identity_residual,
    orthogonal_circle,
    soddy_circles,
    target_from_angle,
    target_from_distance,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationMatrix",
    "ConstraintRow",
    "DataMatrix",
    "DependentKnownsError",
    "DimensionMismatchError",
    "DisjointCirclesError",
    "GeneralizedSphere",
    "Hyperplane",
    "ImaginaryCircleError",
    "ImproperCircleError",
    "InconsistentSystemError",
    "Inertia",
    "MVector",
    "NoRealSolutionError",
    "NotTangentError",
    "PedoeError",
    "PointShape",
    "RayClass",
    "Realizability",
    "SingularMatrixError",
    "SolveResult",
    "Sphere",
    "SymMatrix",
    "UnknownFamilyError",
    "UnsupportedRenderError",
    "ZeroVectorError",
    "apollonius",
    "apollonius_all",
    "classify_ray",
    "complete_configuration",
    "curvature_solve",
    "darboux",
    "data_matrix",
    "dual_products",
    "family_identity_residual",
    "from_orthonormal",
    "gram",
    "inertia",
    "inner",
    "intersection_angle",
    "invert_in_unit_sphere",
    "invert_symmetric",
    "master_residual",
    "metric",
    "metric_inverse",
    "norm_sq",
    "orthogonal_circle",
    "pedoe_product",
    "pedoe_vector",
    "point_ray",
    "power_of_point",
    "realizable",
    "soddy_circles",
    "solve_affine",
    "sphere_from_vector",
    "target_from_angle",
    "target_from_distance",
    "to_orthonormal",
]
