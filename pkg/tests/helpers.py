"""Shared construction helpers for the test suite."""

import math

import numpy as np

import adsgeo as ag


def equator_sample(m=64, n=2):
    """Constant graph theta = 0 over m quasi-uniform boundary directions."""
    ys = ag.sphere_grid(n, m)
    return ag.AchronalSample(ys, np.zeros(ys.shape[0]))


def spread_directions(rng, n, k, min_sep=0.05, antipodal=True):
    """k distinct unit directions, optionally containing an antipodal pair."""
    dirs = []
    if antipodal:
        y = _unit(rng, n)
        dirs = [y, -y]
    while len(dirs) < k:
        y = _unit(rng, n)
        if all(ag.spherical_distance(y, d) > min_sep for d in dirs):
            dirs.append(y)
    return np.stack(dirs[:k], axis=0)


def _unit(rng, n):
    while True:
        g = rng.standard_normal(n)
        norm = np.linalg.norm(g)
        if norm > 1e-6:
            return g / norm


def random_achronal_sample(rng, n=2, k=12, contraction=0.8, antipodal=True,
                           offset=None):
    """Random strictly acausal sample: theta = c * d(y, a) + offset, |c| < 1."""
    ys = spread_directions(rng, n, k, antipodal=antipodal)
    anchor = _unit(rng, n)
    if offset is None:
        offset = float(rng.uniform(-2.0, 2.0))
    thetas = contraction * np.arccos(
        np.clip(ys @ anchor, -1.0, 1.0)) + offset
    return ag.AchronalSample(ys, thetas)


def lightcone_sample(n=2, m=200, apex=None, exclusion=0.2):
    """Past-lightcone graph theta(y) = pi/2 - d(apex, y), pure lightlike.

    Keeps the exact apex and its antipode but thins other samples within
    ``exclusion`` of the apex, so lowering the apex angle by 0.1 stays
    Lipschitz and opens a nonempty domain.
    """
    if apex is None:
        apex = np.zeros(n)
        apex[0] = 1.0
    ys = [apex, -apex]
    for y in ag.sphere_grid(n, m):
        if ag.spherical_distance(y, apex) >= exclusion and \
                ag.spherical_distance(y, -apex) >= 0.05:
            ys.append(y)
    ys = np.stack(ys, axis=0)
    thetas = math.pi / 2.0 - np.arccos(np.clip(ys @ apex, -1.0, 1.0))
    return ag.AchronalSample(ys, thetas)


def boost_block(s, n=2, axis=0):
    """Lorentz boost of rapidity s on (u, x_axis) in (1,n) block form."""
    b = np.eye(n + 1)
    b[0, 0] = b[1 + axis, 1 + axis] = math.cosh(s)
    b[0, 1 + axis] = b[1 + axis, 0] = math.sinh(s)
    return b


def boost_isometry(s, n=2, axis=0):
    return ag.fuchsian_embed(boost_block(s, n, axis))


def grid_rotation(k, m, n=2):
    """Rotation by 2*pi*k/m in the first two spatial coordinates; permutes
    the m-point equator sample exactly."""
    phi = 2.0 * math.pi * k / m
    mat = np.eye(n + 2)
    mat[2, 2] = mat[3, 3] = math.cos(phi)
    mat[2, 3] = -math.sin(phi)
    mat[3, 2] = math.sin(phi)
    return ag.certify_isometry(mat)


def default_fuchsian_rep(n=2, s=0.8):
    """Two loxodromic generators boosting along different spatial axes."""
    return ag.fuchsian_rep([boost_block(s, n, 0), boost_block(s, n, 1)])
