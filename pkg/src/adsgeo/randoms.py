"""Seeded generators of admissible random inputs for experiment harnesses.

Everything takes a numpy Generator so harnesses are reproducible; rejection
loops are bounded by construction (the accepted regions have positive
measure).
"""

import math

import numpy as np
from scipy.linalg import expm

from .flows import UnitSpacelikeTangent
from .fuchsian import cone_tangent_at, default_v_axis
from .quadratic import certify_isometry, form_matrix, inner, q_eval


def random_ads_point(rng, n):
    """Random hyperboloid point (q = -1), heavier near the waist."""
    while True:
        g = rng.standard_normal(n + 2)
        q = q_eval(g)
        if q < -1e-3:
            return g / math.sqrt(-q)


def random_spacelike_tangent(rng, x):
    """Random unit spacelike tangent at a hyperboloid point."""
    while True:
        g = rng.standard_normal(x.shape[0])
        w = g + inner(g, x) * x
        q = q_eval(w)
        if q > 1e-6:
            return w / math.sqrt(q)


def random_isometry(rng, n, scale=0.5):
    """Random certified isometry exp(J W) with W antisymmetric."""
    d = n + 2
    w = rng.standard_normal((d, d))
    w = scale * (w - w.T) / 2.0
    return certify_isometry(expm(form_matrix(n) @ w), tol=1e-7)


def random_h_tangent(rng, n, v_axis=None):
    """Random unit spacelike tangent with both legs orthogonal to V."""
    v_axis = default_v_axis(n + 2) if v_axis is None else v_axis
    while True:
        g = rng.standard_normal(n + 2)
        g = g + inner(g, v_axis) * v_axis
        q = q_eval(g)
        if q < -1e-3:
            x = g / math.sqrt(-q)
            break
    while True:
        g = rng.standard_normal(n + 2)
        g = g + inner(g, v_axis) * v_axis
        w = g + inner(g, x) * x
        q = q_eval(w)
        if q > 1e-6:
            return UnitSpacelikeTangent(x, w / math.sqrt(q))


def random_cone_tangent(rng, w0, endpoint="plus"):
    """Random non-radial cone tangent at an endpoint representative."""
    zeta = w0.x + w0.v if endpoint == "plus" else w0.x - w0.v
    while True:
        w = cone_tangent_at(zeta, w0.x, rng.standard_normal(zeta.shape[0]))
        # reject near-radial draws: the pushforward must not vanish
        radial = (inner(w, zeta) ** 2)
        if np.linalg.norm(w - (np.dot(w, zeta) / np.dot(zeta, zeta)) * zeta) \
                > 1e-3 and radial < 1e-16:
            return w
