"""Geometric primitives in R^n and their Minkowski-vector encodings.

Radii are signed: a negative radius denotes the unbounded complementary
disk of the same circle, and its vector is the negation of the
positive-radius one.  This orientation sign is what lets a single +1
tangency value cover every "kissing" arrangement, with enclosing circles
carrying negative curvature instead of a separate bend convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    DisjointCirclesError,
    ImaginaryCircleError,
    ImproperCircleError,
)
from .minkowski import CLASSIFY_TOL, MVector, RayClass, _inner_raw, classify_ray

_UNIT_NORMAL_TOL = 1e-12
_THROUGH_ORIGIN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Sphere:
    """Oriented (n-1)-sphere: center plus signed nonzero radius."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.array(self.center, dtype=float, ndmin=1)
        r = float(self.radius)
        if c.ndim != 1 or c.size < 1 or not np.all(np.isfinite(c)):
            raise ValueError("center must be a finite vector")
        if r == 0.0 or not np.isfinite(r):
            raise ValueError("radius must be a nonzero finite real")
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    @property
    def n(self) -> int:
        return self.center.size

    @property
    def curvature(self) -> float:
        return 1.0 / self.radius

    @property
    def geometric_radius(self) -> float:
        return abs(self.radius)

    def flip(self) -> "Sphere":
        """The complementary disk: same circle, opposite orientation."""
        return Sphere(self.center, -self.radius)

    def __repr__(self):
        return f"Sphere(center={self.center.tolist()}, radius={self.radius})"


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """Hyperplane normal . x = offset with a unit normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        nvec = np.array(self.normal, dtype=float, ndmin=1)
        c = float(self.offset)
        if nvec.ndim != 1 or nvec.size < 1 or not np.all(np.isfinite(nvec)):
            raise ValueError("normal must be a finite vector")
        if abs(np.linalg.norm(nvec) - 1.0) > _UNIT_NORMAL_TOL:
            raise ValueError("normal must have unit Euclidean norm")
        if not np.isfinite(c):
            raise ValueError("offset must be finite")
        nvec.setflags(write=False)
        object.__setattr__(self, "normal", nvec)
        object.__setattr__(self, "offset", c)

    @property
    def n(self) -> int:
        return self.normal.size

    def flip(self) -> "Hyperplane":
        return Hyperplane(-self.normal, -self.offset)

    def __repr__(self):
        return f"Hyperplane(normal={self.normal.tolist()}, offset={self.offset})"


@dataclass(frozen=True, eq=False)
class PointShape:
    """A point, viewed as an improper sphere of zero radius."""

    location: np.ndarray

    def __post_init__(self):
        p = np.array(self.location, dtype=float, ndmin=1)
        if p.ndim != 1 or p.size < 1 or not np.all(np.isfinite(p)):
            raise ValueError("location must be a finite vector")
        p.setflags(write=False)
        object.__setattr__(self, "location", p)

    @property
    def n(self) -> int:
        return self.location.size

    def __repr__(self):
        return f"PointShape({self.location.tolist()})"


GeneralizedSphere = Union[Sphere, Hyperplane, PointShape]


def _check_same_dim(a, b):
    if a.n != b.n:
        raise DimensionMismatchError(f"ambient dimensions differ: {a.n} vs {b.n}")


def power_of_point(p: PointShape, c: Sphere) -> float:
    """Power of a point with respect to a sphere: d^2 - r^2."""
    _check_same_dim(p, c)
    d = p.location - c.center
    return float(d @ d) - c.geometric_radius ** 2


def darboux(c1: Sphere, c2: Sphere) -> float:
    """Darboux product of two spheres: d^2 - r1^2 - r2^2.

    Equals 2*r1*r2*cos(phi) when the spheres meet at angle phi.
    """
    _check_same_dim(c1, c2)
    d = c1.center - c2.center
    return float(d @ d) - c1.radius ** 2 - c2.radius ** 2


def pedoe_vector(s: GeneralizedSphere) -> MVector:
    """Unit Minkowski vector of a sphere or hyperplane (norm squared -1).

    Spheres map to (1/r, (|c|^2 - r^2)/r, c/r) with the signed radius, so
    flipping the orientation negates the vector.  Hyperplanes map to
    (0, 2*offset, normal).  Points have no unit vector; use point_ray.
    """
    if isinstance(s, PointShape):
        raise ImproperCircleError("points lie on the light cone and have no unit vector")
    if isinstance(s, Sphere):
        r = s.radius
        c = s.center
        head = [1.0 / r, (float(c @ c) - r * r) / r]
        return MVector(np.concatenate((head, c / r)))
    if isinstance(s, Hyperplane):
        return MVector(np.concatenate(([0.0, 2.0 * s.offset], s.normal)))
    raise TypeError(f"not a generalized sphere: {type(s).__name__}")


def point_ray(p: PointShape) -> MVector:
    """Light-cone representative of a point: (1, |p|^2, p)."""
    loc = p.location
    return MVector(np.concatenate(([1.0, float(loc @ loc)], loc)))


def pedoe_product(c1: GeneralizedSphere, c2: GeneralizedSphere) -> float:
    """Inner product of the unit vectors of two spheres/hyperplanes.

    For positive-radius spheres this is half the Darboux product over
    r1*r2: +1 for external tangency, -1 for internal, 0 for orthogonality,
    cos(phi) at intersection angle phi.  Orientation flips the sign once
    per flipped argument.
    """
    v1 = pedoe_vector(c1)
    v2 = pedoe_vector(c2)
    if v1.components.size != v2.components.size:
        raise DimensionMismatchError(f"ambient dimensions differ: {c1.n} vs {c2.n}")
    return _inner_raw(v1.components, v2.components)


def intersection_angle(c1: Sphere, c2: Sphere) -> float:
    """Angle between two intersecting spheres, in radians within [0, pi]."""
    p = pedoe_product(c1, c2)
    if abs(p) > 1.0 + 1e-12:
        raise DisjointCirclesError(f"|pedoe product| = {abs(p):.6g} > 1: no intersection")
    return float(np.arccos(np.clip(p, -1.0, 1.0)))


def sphere_from_vector(v: MVector, tol: float = CLASSIFY_TOL) -> GeneralizedSphere:
    """Geometric shape of a Minkowski vector, inverting pedoe_vector.

    The vector is classified first; proper spheres are rescaled to norm
    squared -1 (preserving orientation), hyperplane rays get a unit normal,
    light-cone rays become points.  Positive-norm vectors raise
    ImaginaryCircleError.
    """
    cls = classify_ray(v, tol)
    c = v.components
    if cls is RayClass.HYPERPLANE_RAY:
        scale = float(np.linalg.norm(c[2:]))
        if scale <= tol * float(np.max(np.abs(c))):
            raise ValueError("degenerate hyperplane ray: no normal direction")
        return Hyperplane(c[2:] / scale, c[1] / (2.0 * scale))
    if cls is RayClass.POINT_RAY:
        return PointShape(c[2:] / c[0])
    if cls is RayClass.IMAGINARY:
        raise ImaginaryCircleError("positive Minkowski norm: no real sphere")
    u = c / np.sqrt(-_inner_raw(c, c))
    r = 1.0 / u[0]
    return Sphere(u[2:] * r, r)


def invert_in_unit_sphere(s: Sphere) -> GeneralizedSphere:
    """Image of a sphere under inversion in the unit sphere at the origin.

    The image curvature equals the co-curvature component of the source's
    vector (orientation included).  A sphere through the origin maps to a
    hyperplane instead.
    """
    c = s.center
    r = s.radius
    rho2 = float(c @ c)
    denom = rho2 - r * r  # power of the origin
    if abs(denom) <= _THROUGH_ORIGIN_TOL * max(rho2, r * r, 1.0):
        dist = np.sqrt(rho2)
        sign = 1.0 if r > 0 else -1.0
        return Hyperplane(sign * c / dist, sign / (2.0 * dist))
    return Sphere(c / denom, r / denom)
