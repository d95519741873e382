"""Shared builders and independent oracles for the test suite."""

import math

import numpy as np
import pytest

from pedoe import Sphere


SQRT3 = math.sqrt(3.0)


@pytest.fixture
def unit_triple():
    """Three mutually externally tangent unit circles (equilateral, side 2)."""
    return [
        Sphere([0.0, 0.0], 1.0),
        Sphere([2.0, 0.0], 1.0),
        Sphere([1.0, SQRT3], 1.0),
    ]


@pytest.fixture
def descartes_quadruple(unit_triple):
    """Unit triple plus the inner tangent circle: all pairwise products +1."""
    inner = Sphere([1.0, 1.0 / SQRT3], 1.0 / (3.0 + 2.0 * SQRT3))
    return unit_triple + [inner]


@pytest.fixture
def orthogonal_quadruple(unit_triple):
    """Unit triple plus the circle orthogonal to all three (radius 1/sqrt3)."""
    ortho = Sphere([1.0, 1.0 / SQRT3], 1.0 / SQRT3)
    return unit_triple + [ortho]


def random_circle(rng, n=2, center_scale=5.0, r_lo=0.3, r_hi=2.0, oriented=False):
    center = rng.uniform(-center_scale, center_scale, size=n)
    radius = rng.uniform(r_lo, r_hi)
    if oriented and rng.random() < 0.5:
        radius = -radius
    return Sphere(center, radius)


def random_tangent_triple(rng, n=2):
    """Three mutually externally tangent circles with random radii."""
    r1, r2, r3 = rng.uniform(0.4, 2.0, size=3)
    c1 = np.zeros(n)
    c2 = np.zeros(n)
    c2[0] = r1 + r2
    # third center from the two tangency distance equations
    d13, d23 = r1 + r3, r2 + r3
    x = (d13 * d13 - d23 * d23 + c2[0] ** 2) / (2.0 * c2[0])
    y = math.sqrt(max(d13 * d13 - x * x, 0.0))
    c3 = np.zeros(n)
    c3[0], c3[1] = x, y
    return [Sphere(c1, r1), Sphere(c2, r2), Sphere(c3, r3)]


def tangency_error(solution, circle):
    """Euclidean tangency defect of a solution against one circle.

    Raw center/radius arithmetic only: |d - (r + ri)| or |d - |r - ri||
    for circle solutions, |dist(center, line) - ri| for line solutions.
    """
    if isinstance(solution, Sphere):
        d = float(np.linalg.norm(solution.center - circle.center))
        r, ri = abs(solution.radius), abs(circle.radius)
        return min(abs(d - (r + ri)), abs(d - abs(r - ri)))
    d = abs(float(solution.normal @ circle.center) - solution.offset)
    return abs(d - abs(circle.radius))


def geometric_contains(outer, inner, tol=1e-9):
    """Whether the |r|-circle of `outer` strictly contains that of `inner`."""
    if not isinstance(outer, Sphere) or not isinstance(inner, Sphere):
        return False
    d = float(np.linalg.norm(outer.center - inner.center))
    return d + abs(inner.radius) <= abs(outer.radius) + tol
