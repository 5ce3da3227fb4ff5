"""Deterministic quasi-uniform grids on spheres and hemispheres.

All generators are pure functions of their arguments (low-discrepancy
sequences with pinned seeds), so repeated runs produce byte-identical
artifacts.
"""

import math

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


def sphere_grid(n, m):
    """m quasi-uniform directions on the sphere S^{n-1} in R^n.

    n = 1 is the two-point sphere: both points are returned regardless of m.
    n = 2 uses equally spaced circle angles (so grid-aligned rotations
    permute the set exactly), n = 3 a Fibonacci lattice, higher n a Halton
    sequence pushed through the inverse normal CDF and normalized.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        angles = 2.0 * math.pi * np.arange(m) / m
        return np.stack([np.cos(angles), np.sin(angles)], axis=1)
    if n == 3:
        k = np.arange(m)
        z = 1.0 - (2.0 * k + 1.0) / m
        r = np.sqrt(np.clip(1.0 - z * z, 0.0, 1.0))
        phi = GOLDEN_ANGLE * k
        return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
    pts = qmc.Halton(d=n, scramble=False, seed=0).random(m)
    g = ndtri(np.clip(pts, 1e-12, 1.0 - 1e-12))
    norms = np.linalg.norm(g, axis=1)
    norms[norms == 0.0] = 1.0
    return g / norms[:, None]


def hemisphere_grid(n, m, min_height=0.05):
    """Roughly m interior points of the open upper hemisphere of S^n.

    Polar shells (cos a, sin a * w) with w on S^{n-1}; the pole comes
    first and every point keeps first coordinate >= min_height.
    """
    shells = max(1, int(round(math.sqrt(m))))
    per = max(1, int(math.ceil((m - 1) / shells)))
    alpha_max = math.acos(min(1.0, max(min_height, 0.0)))
    pts = [np.concatenate(([1.0], np.zeros(n)))]
    for j in range(1, shells + 1):
        alpha = alpha_max * j / (shells + 1)
        for w in sphere_grid(n, per):
            pts.append(np.concatenate(([math.cos(alpha)],
                                       math.sin(alpha) * w)))
    return np.stack(pts[:m], axis=0)
