import math

import numpy as np
import pytest

from pedoe import (
    DimensionMismatchError,
    DisjointCirclesError,
    Hyperplane,
    ImaginaryCircleError,
    ImproperCircleError,
    MVector,
    PointShape,
    Sphere,
    darboux,
    inner,
    intersection_angle,
    invert_in_unit_sphere,
    norm_sq,
    pedoe_product,
    pedoe_vector,
    point_ray,
    power_of_point,
    sphere_from_vector,
)
from conftest import random_circle


def test_power_of_point_basic():
    c = Sphere([2.0, 0.0], 1.0)
    assert power_of_point(PointShape([0.0, 0.0]), c) == 3.0


def test_power_of_point_on_circle_and_center():
    c = Sphere([2.0, 0.0], 1.0)
    assert power_of_point(PointShape([1.0, 0.0]), c) == 0.0
    assert power_of_point(PointShape([2.0, 0.0]), c) == -1.0


def test_power_dimension_check():
    with pytest.raises(DimensionMismatchError):
        power_of_point(PointShape([0.0, 0.0, 0.0]), Sphere([1.0, 0.0], 1.0))


def test_darboux_concentric():
    assert darboux(Sphere([0.0, 0.0], 1.0), Sphere([0.0, 0.0], 2.0)) == -5.0


def test_darboux_unit_circles_distance_two():
    assert darboux(Sphere([0.0, 0.0], 1.0), Sphere([2.0, 0.0], 1.0)) == 2.0


def test_darboux_orthogonal_vanishes():
    s2 = math.sqrt(2.0)
    assert abs(darboux(Sphere([0.0, 0.0], 1.0), Sphere([s2, 0.0], 1.0))) <= 1e-15


def test_pedoe_product_tangency_values():
    a = Sphere([0.0, 0.0], 1.0)
    assert abs(pedoe_product(a, Sphere([2.0, 0.0], 1.0)) - 1.0) <= 1e-15
    # internal tangency: small circle inside a big one, same touching point
    assert abs(pedoe_product(a, Sphere([1.0, 0.0], 2.0)) + 1.0) <= 1e-15


def test_pedoe_product_orthogonal_and_sixty_degrees():
    a = Sphere([0.0, 0.0], 1.0)
    s2, s3 = math.sqrt(2.0), math.sqrt(3.0)
    assert abs(pedoe_product(a, Sphere([s2, 0.0], 1.0))) <= 1e-15
    assert abs(pedoe_product(a, Sphere([s3, 0.0], 1.0)) - 0.5) <= 1e-15


def test_pedoe_product_rejects_points():
    with pytest.raises(ImproperCircleError):
        pedoe_product(PointShape([0.0, 0.0]), Sphere([1.0, 0.0], 1.0))


def test_pedoe_product_sphere_plane_is_scaled_signed_distance():
    line = Hyperplane([1.0, 0.0], 5.0)
    assert abs(pedoe_product(Sphere([4.0, 0.0], 1.0), line) - 1.0) <= 1e-15
    assert abs(pedoe_product(Sphere([6.0, 0.0], 1.0), line) + 1.0) <= 1e-15
    assert abs(pedoe_product(Sphere([3.0, 7.0], 2.0), line) - 1.0) <= 1e-15


def test_intersection_angle_values():
    a = Sphere([0.0, 0.0], 1.0)
    assert abs(intersection_angle(a, Sphere([math.sqrt(2.0), 0.0], 1.0)) - math.pi / 2) <= 1e-12
    assert intersection_angle(a, Sphere([2.0, 0.0], 1.0)) <= 1e-7
    assert abs(intersection_angle(a, Sphere([math.sqrt(3.0), 0.0], 1.0)) - math.pi / 3) <= 1e-12


def test_intersection_angle_disjoint_raises():
    with pytest.raises(DisjointCirclesError):
        intersection_angle(Sphere([0.0, 0.0], 1.0), Sphere([5.0, 0.0], 1.0))


def test_pedoe_vector_examples():
    assert np.array_equal(pedoe_vector(Sphere([0.0, 0.0], 1.0)).components, [1.0, -1.0, 0.0, 0.0])
    assert np.array_equal(pedoe_vector(Sphere([2.0, 0.0], 1.0)).components, [1.0, 3.0, 2.0, 0.0])
    assert np.array_equal(pedoe_vector(Hyperplane([1.0, 0.0], 5.0)).components, [0.0, 10.0, 1.0, 0.0])


def test_pedoe_vector_norm_is_minus_one():
    rng = np.random.default_rng(31)
    for _ in range(300):
        s = random_circle(rng, oriented=True)
        assert abs(norm_sq(pedoe_vector(s)) + 1.0) <= 1e-12
    for _ in range(100):
        direction = rng.normal(size=2)
        plane = Hyperplane(direction / np.linalg.norm(direction), rng.uniform(-5, 5))
        assert abs(norm_sq(pedoe_vector(plane)) + 1.0) <= 1e-12


def test_pedoe_vector_sign_follows_orientation():
    s = Sphere([1.5, -0.5], -0.75)
    assert pedoe_vector(s).curvature < 0
    flipped = pedoe_vector(s.flip()).components
    assert np.array_equal(flipped, -pedoe_vector(s).components)


def test_point_ray_examples():
    assert np.array_equal(point_ray(PointShape([0.0, 0.0])).components, [1.0, 0.0, 0.0, 0.0])
    assert np.array_equal(point_ray(PointShape([1.0, 1.0])).components, [1.0, 2.0, 1.0, 1.0])
    assert np.array_equal(point_ray(PointShape([3.0, 4.0])).components, [1.0, 25.0, 3.0, 4.0])
    assert norm_sq(point_ray(PointShape([3.0, 4.0]))) == 0.0


def test_sphere_from_vector_examples():
    s = sphere_from_vector(MVector([1.0, 3.0, 2.0, 0.0]))
    assert np.allclose(s.center, [2.0, 0.0]) and abs(s.radius - 1.0) <= 1e-14
    same = sphere_from_vector(MVector([2.0, 6.0, 4.0, 0.0]))
    assert np.allclose(same.center, [2.0, 0.0]) and abs(same.radius - 1.0) <= 1e-14
    with pytest.raises(ImaginaryCircleError):
        sphere_from_vector(MVector([1.0, 1.0, 0.0, 0.0]))


def test_sphere_from_vector_keeps_orientation():
    s = sphere_from_vector(MVector([-1.0, -3.0, -2.0, 0.0]))
    assert s.radius == pytest.approx(-1.0, abs=1e-14)
    assert np.allclose(s.center, [2.0, 0.0])


def test_sphere_from_vector_recovers_hyperplanes_and_points():
    h = sphere_from_vector(MVector([0.0, 10.0, 1.0, 0.0]))
    assert isinstance(h, Hyperplane)
    assert np.allclose(h.normal, [1.0, 0.0]) and h.offset == pytest.approx(5.0)
    p = sphere_from_vector(MVector([2.0, 4.0, 2.0, 2.0]))
    assert isinstance(p, PointShape)
    assert np.allclose(p.location, [1.0, 1.0])


def test_round_trip_spheres_and_hyperplanes():
    rng = np.random.default_rng(32)
    for _ in range(300):
        s = random_circle(rng, n=int(rng.integers(2, 5)), oriented=True)
        back = sphere_from_vector(pedoe_vector(s))
        assert np.max(np.abs(back.center - s.center)) <= 1e-10
        assert abs(back.radius - s.radius) <= 1e-10
    for _ in range(100):
        n = int(rng.integers(2, 5))
        direction = rng.normal(size=n)
        plane = Hyperplane(direction / np.linalg.norm(direction), rng.uniform(-5, 5))
        back = sphere_from_vector(pedoe_vector(plane))
        assert np.max(np.abs(back.normal - plane.normal)) <= 1e-12
        assert abs(back.offset - plane.offset) <= 1e-12


def test_inversion_examples():
    img = invert_in_unit_sphere(Sphere([2.0, 0.0], 1.0))
    assert np.allclose(img.center, [2.0 / 3.0, 0.0]) and abs(img.radius - 1.0 / 3.0) <= 1e-15
    fixed = invert_in_unit_sphere(Sphere([0.0, 0.0], 1.0))
    assert np.allclose(fixed.center, [0.0, 0.0]) and fixed.radius == -1.0  # complement disk
    line = invert_in_unit_sphere(Sphere([1.0, 0.0], 1.0))
    assert isinstance(line, Hyperplane)
    assert np.allclose(line.normal, [1.0, 0.0]) and line.offset == pytest.approx(0.5)


def test_co_curvature_equals_inverted_curvature():
    rng = np.random.default_rng(33)
    done = 0
    while done < 500:
        s = random_circle(rng, oriented=True)
        if abs(float(s.center @ s.center) - s.radius ** 2) < 1e-3:
            continue
        img = invert_in_unit_sphere(s)
        assert abs(pedoe_vector(s).co_curvature - img.curvature) <= 1e-9 * max(
            1.0, abs(img.curvature)
        )
        done += 1


def test_product_matches_darboux_formula():
    rng = np.random.default_rng(34)
    for _ in range(1000):
        a = random_circle(rng)
        b = random_circle(rng)
        expected = 0.5 * darboux(a, b) / (a.radius * b.radius)
        assert abs(pedoe_product(a, b) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_coefficient_vectors_reproduce_darboux():
    # vectors (1, |c|^2 - r^2, c) from the circle equation coefficients:
    # twice their product is the raw center/radius Darboux value
    rng = np.random.default_rng(35)
    for _ in range(200):
        a = random_circle(rng)
        b = random_circle(rng)
        u = MVector(np.concatenate(([1.0, float(a.center @ a.center) - a.radius ** 2], a.center)))
        w = MVector(np.concatenate(([1.0, float(b.center @ b.center) - b.radius ** 2], b.center)))
        assert abs(2.0 * inner(u, w) - darboux(a, b)) <= 1e-10 * max(1.0, abs(darboux(a, b)))


def test_shape_validation():
    with pytest.raises(ValueError):
        Sphere([0.0, 0.0], 0.0)
    with pytest.raises(ValueError):
        Sphere([np.nan, 0.0], 1.0)
    with pytest.raises(ValueError):
        Hyperplane([1.0, 1.0], 0.0)  # not unit
    assert Sphere([1.0, 2.0], -3.0).geometric_radius == 3.0
