"""Form evaluation, classification, rays and isometry certification."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import adsgeo as ag
from adsgeo.randoms import random_isometry


def test_q_eval_examples():
    assert ag.q_eval([1, 0, 0, 0]) == -1.0
    assert ag.q_eval([0, 0, 1, 0]) == 1.0
    assert ag.q_eval([1, 1, 1, 1]) == 0.0


def test_inner_examples():
    assert ag.inner([1, 0, 0, 0], [0, 1, 0, 0]) == 0.0
    assert ag.inner([1, 0, 1, 0], [1, 0, -1, 0]) == -2.0
    assert ag.inner([1, 0, 1, 0], [1, 0, 1, 0]) == 0.0


def test_inner_dimension_mismatch():
    with pytest.raises(ag.GeometryError):
        ag.inner([1, 0, 0, 0], [1, 0, 0, 0, 0])


def test_classify_examples():
    assert ag.classify([1, 0, 0, 0]) == ag.TIMELIKE
    assert ag.classify([1, 1, 1, 1]) == ag.LIGHTLIKE
    assert ag.classify([0, 0, 0, 0]) == ag.ZERO
    assert ag.classify([0, 0, 1, 0]) == ag.SPACELIKE


def test_ray_examples():
    assert np.array_equal(ag.ray([2, 0, 0, 0]).rep, [1, 0, 0, 0])
    assert np.array_equal(ag.ray([-2, 0, 0, 0]).rep, [-1, 0, 0, 0])
    assert np.allclose(ag.ray([1, 1, 1, 1]).rep, [0.5, 0.5, 0.5, 0.5])


def test_ray_rejects_zero():
    with pytest.raises(ag.GeometryError):
        ag.ray([0.0, 0.0, 0.0, 0.0])


def test_ray_idempotent_exactly(rng):
    for _ in range(50):
        r = ag.ray(rng.standard_normal(5))
        again = ag.ray(r.rep)
        assert np.array_equal(again.rep, r.rep)


@given(st.integers(min_value=-60, max_value=60))
@settings(max_examples=30, deadline=None)
def test_ray_power_of_two_scale_invariance(k):
    x = np.array([0.3, -1.2, 0.7, 2.0])
    lam = 2.0 ** k
    assert np.array_equal(ag.ray(lam * x).rep, ag.ray(x).rep)


@given(st.floats(min_value=1e-6, max_value=1e6))
@settings(max_examples=50, deadline=None)
def test_ray_general_scale_invariance(lam):
    x = np.array([0.3, -1.2, 0.7, 2.0])
    assert np.abs(ag.ray(lam * x).rep - ag.ray(x).rep).max() < 1e-14
    # opposite rays stay distinct
    assert ag.chordal_distance(ag.ray(-x), ag.ray(x)) > 1.0


def test_polarization_identity(rng):
    for _ in range(200):
        n = int(rng.integers(1, 4))
        x = rng.standard_normal(n + 2)
        y = rng.standard_normal(n + 2)
        lhs = ag.inner(x, y)
        rhs = (ag.q_eval(x + y) - ag.q_eval(x) - ag.q_eval(y)) / 2.0
        assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(lhs))


def test_certify_identity():
    iso = ag.certify_isometry(np.eye(5))
    assert iso.certified and iso.n == 3


def test_certify_rejects_reflection():
    m = np.diag([1.0, 1.0, -1.0, 1.0])
    with pytest.raises(ag.NotIdentityComponent):
        ag.certify_isometry(m)


def test_certify_rejects_time_reversal():
    # det stays +1 (u and one spatial axis flip) but the time block loses
    # its orientation.
    m = np.diag([-1.0, 1.0, -1.0, 1.0])
    with pytest.raises(ag.NotIdentityComponent):
        ag.certify_isometry(m)


def test_certify_rejects_non_isometry():
    with pytest.raises(ag.NotAnIsometry):
        ag.certify_isometry(2.0 * np.eye(4))


def test_certify_uv_rotation():
    phi = 0.7
    m = np.eye(4)
    m[0, 0] = m[1, 1] = math.cos(phi)
    m[0, 1] = -math.sin(phi)
    m[1, 0] = math.sin(phi)
    iso = ag.certify_isometry(m)
    assert iso.certified
    assert np.abs(iso.matrix - m).max() == 0.0


def test_isometry_invariance_of_inner(rng):
    for _ in range(40):
        n = int(rng.integers(1, 4))
        iso = random_isometry(rng, n)
        x = rng.standard_normal(n + 2) * rng.uniform(0.1, 5.0)
        y = rng.standard_normal(n + 2) * rng.uniform(0.1, 5.0)
        lhs = ag.inner(iso.apply(x), iso.apply(y))
        rhs = ag.inner(x, y)
        bound = 1e-9 * (1.0 + np.linalg.norm(x) * np.linalg.norm(y))
        assert abs(lhs - rhs) <= bound


def test_isometry_inverse_and_composition(rng):
    iso = random_isometry(rng, 2)
    prod = iso @ iso.inverse()
    assert np.abs(prod.matrix - np.eye(4)).max() < 1e-12
    r = ag.ray([1.0, 0.2, 0.5, -0.3])
    moved = iso.apply_ray(r)
    back = iso.inverse().apply_ray(moved)
    assert ag.chordal_distance(back, r) < 1e-12
