"""Coordinate conversions, deck arithmetic, charts and geodesics."""

import math

import numpy as np
import pytest

import adsgeo as ag
from adsgeo.randoms import random_ads_point, random_isometry


def test_wrap_angle_branch():
    assert ag.wrap_angle(math.pi) == math.pi
    assert ag.wrap_angle(-math.pi) == math.pi
    assert abs(ag.wrap_angle(3 * math.pi) - math.pi) < 1e-12
    assert abs(ag.wrap_angle(0.3) - 0.3) == 0.0


def test_ads_to_conformal_poles():
    c = ag.ads_to_conformal([1, 0, 0, 0])
    assert c.theta == 0.0
    assert np.allclose(c.disk, [1, 0, 0])
    c = ag.ads_to_conformal([0, 1, 0, 0])
    assert abs(c.theta - math.pi / 2) < 1e-15
    assert np.allclose(c.disk, [1, 0, 0])


def test_ads_to_conformal_off_pole():
    c = ag.ads_to_conformal([math.sqrt(2), 0, 1, 0])
    assert c.theta == 0.0
    assert np.allclose(c.disk, [1 / math.sqrt(2), 1 / math.sqrt(2), 0])
    assert abs(np.linalg.norm(c.disk) - 1.0) < 1e-15


def test_conformal_to_ads_inverse_examples():
    pole = np.array([1.0, 0.0, 0.0])
    assert np.allclose(
        ag.conformal_to_ads(ag.ConformalAdsPoint(0.0, pole)), [1, 0, 0, 0])
    assert np.allclose(
        ag.conformal_to_ads(ag.ConformalAdsPoint(math.pi / 2, pole)),
        [0, 1, 0, 0], atol=1e-15)
    c = ag.ConformalAdsPoint(
        0.0, np.array([1 / math.sqrt(2), 1 / math.sqrt(2), 0.0]))
    assert np.allclose(ag.conformal_to_ads(c), [math.sqrt(2), 0, 1, 0])


def test_conformal_rejects_boundary():
    with pytest.raises(ag.GeometryError):
        ag.conformal_to_ads(ag.ConformalAdsPoint(0.0, np.array([0.0, 1, 0])))


def test_round_trip_random(rng):
    for n in (1, 2, 3):
        for _ in range(300):
            p = random_ads_point(rng, n)
            c = ag.ads_to_conformal(p)
            assert np.abs(ag.conformal_to_ads(c) - p).max() <= 1e-9


def test_null_ray_to_einstein_examples():
    e = ag.null_ray_to_einstein(ag.ray([1, 0, 1, 0]))
    assert e.theta == 0.0 and np.allclose(e.y, [1, 0])
    e = ag.null_ray_to_einstein(ag.ray([0, 1, 0, 1]))
    assert abs(e.theta - math.pi / 2) < 1e-15 and np.allclose(e.y, [0, 1])
    e2 = ag.null_ray_to_einstein(ag.ray([2, 0, 2, 0]))
    assert e2.theta == 0.0 and np.allclose(e2.y, [1, 0])


def test_null_ray_scale_invariance(rng):
    for _ in range(100):
        z = ag.project_to_cone(rng.standard_normal(4))
        lam = float(rng.uniform(0.1, 10.0))
        e1 = ag.null_ray_to_einstein(ag.ray(z))
        e2 = ag.null_ray_to_einstein(ag.ray(lam * z))
        assert abs(e1.theta - e2.theta) < 1e-14
        assert np.abs(e1.y - e2.y).max() < 1e-14


def test_null_ray_rejects_timelike():
    with pytest.raises(ag.GeometryError):
        ag.null_ray_to_einstein(ag.ray([1, 0, 0, 0]))


def test_antipode_and_deck():
    y0 = np.array([1.0, 0.0])
    e = ag.EinPoint(0.0, y0)
    a = ag.antipode(e)
    assert abs(a.theta - math.pi) < 1e-15
    assert np.allclose(a.y, -y0)
    aa = ag.antipode(a)
    assert abs(ag.wrap_angle(aa.theta - e.theta)) < 1e-15
    assert np.allclose(aa.y, y0)
    u = ag.lift(e)
    assert ag.deck(u, 2).theta_total == 4 * math.pi
    # winding arithmetic is exact
    v = ag.deck(ag.deck(u, 7), -7)
    assert v.theta == u.theta and v.winding == u.winding


def test_ein_null_ray_round_trip(rng):
    for _ in range(50):
        z = ag.project_to_cone(rng.standard_normal(5))
        e = ag.null_ray_to_einstein(ag.ray(z))
        back = ag.ein_to_null_ray(e)
        assert ag.chordal_distance(back, ag.ray(z)) < 1e-12


def test_affine_chart_examples():
    base = np.array([1.0, 0, 0, 0])
    assert np.allclose(ag.affine_chart(base, [1, 0, 0, 0]), [0, 0, 0])
    img = ag.affine_chart(base, [1, 1, 0, 0])
    assert np.allclose(img, [1, 0, 0])
    t, xbar = img[0], img[1:]
    assert -t * t + xbar @ xbar < 1.0
    img = ag.affine_chart(base, [1, 0, 1, 0])
    assert np.allclose(img, [0, 1, 0])
    assert abs(-img[0] ** 2 + img[1:] @ img[1:] - 1.0) < 1e-12


def test_affine_chart_rejects_far_side():
    with pytest.raises(ag.GeometryError):
        ag.affine_chart(np.array([1.0, 0, 0, 0]), [-1.0, 0, 0, 0])


def test_affine_chart_random_base(rng):
    for _ in range(20):
        base = random_ads_point(rng, 2)
        assert np.abs(ag.affine_chart(base, base)).max() < 1e-9
        norm = ag.normalizer_to_origin(base)
        assert np.abs(norm.apply(base) - [1, 0, 0, 0]).max() < 1e-9


def test_chart_maps_geodesics_to_lines(rng):
    base = random_ads_point(rng, 2)
    norm = ag.normalizer_to_origin(base)
    v = ag.normalize_tangent(base, rng.standard_normal(4))
    pts = [ag.geodesic_point(base, v, t) for t in (0.05, 0.1, 0.15)]
    imgs = [ag.affine_chart(base, p, normalizer=norm) for p in pts]
    d1 = imgs[1] - imgs[0]
    d2 = imgs[2] - imgs[0]
    # collinearity: d2 minus its projection on d1 vanishes
    resid = d2 - (d2 @ d1) / (d1 @ d1) * d1
    assert np.linalg.norm(resid) <= 1e-8


def test_geodesic_point_examples():
    x = [1, 0, 0, 0]
    assert np.allclose(ag.geodesic_point(x, [0, 0, 1, 0], 0.0), x)
    g = ag.geodesic_point(x, [0, 0, 1, 0], 1.0)
    assert np.allclose(g, [math.cosh(1), 0, math.sinh(1), 0])
    assert abs(ag.q_eval(g) + 1.0) < 1e-12
    g = ag.geodesic_point(x, [0, 1, 0, 0], math.pi / 2)
    assert np.allclose(g, [0, 1, 0, 0], atol=1e-15)


def test_geodesic_preserves_hyperboloid(rng):
    for _ in range(50):
        x = random_ads_point(rng, 2)
        v = ag.normalize_tangent(x, rng.standard_normal(4))
        t = float(rng.uniform(-10, 10))
        assert abs(ag.q_eval(ag.geodesic_point(x, v, t)) + 1.0) <= 1e-9


def test_geodesic_point_validates():
    with pytest.raises(ag.GeometryError):
        ag.geodesic_point([1, 0, 0, 0], [1, 0, 1, 0], 1.0)  # not tangent
    with pytest.raises(ag.GeometryError):
        ag.geodesic_point([1, 0, 0, 0], [0, 0, 2, 0], 1.0)  # not unit


def test_chart_equivariance_keeps_geodesics_affine(rng):
    # after moving base and geodesic by a random isometry, chart images of
    # geodesic points are still collinear
    base = random_ads_point(rng, 2)
    v = ag.normalize_tangent(base, rng.standard_normal(4))
    iso = random_isometry(rng, 2)
    moved_base = iso.apply(base)
    norm = ag.normalizer_to_origin(moved_base)
    imgs = [ag.affine_chart(moved_base,
                            iso.apply(ag.geodesic_point(base, v, t)),
                            normalizer=norm)
            for t in (0.05, 0.1, 0.15)]
    d1 = imgs[1] - imgs[0]
    d2 = imgs[2] - imgs[0]
    resid = d2 - (d2 @ d1) / (d1 @ d1) * d1
    assert np.linalg.norm(resid) <= 1e-8
