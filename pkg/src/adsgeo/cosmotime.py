"""Cosmological-time estimation on invisible domains.

The cosmological time of a point is the supremum of Lorentzian lengths of
past causal curves from it.  No closed form is available, but timelike
geodesics locally maximize length, so probing past-directed timelike
geodesics gives a certified lower bound: for each direction, bisection on
the Klein membership predicate along the closed-form geodesic finds the
exact exit parameter, which in proper-time parametrization is the segment's
Lorentzian length.

Geodesic convexity of the domain makes the inside set of each geodesic an
interval, so bisection is sound; and any past timelike geodesic reaches the
antipodal point, which always fails membership, at proper time pi, so exits
are bracketed in [0, pi] and every estimate is finite.

Direction grids are deterministic (seeded low-discrepancy rapidity shells
around the canonical future direction, which is always included), so the
maximum and its argmax direction are reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from .config import BISECTION_TOL, BOUNDARY_BAND
from .invisible import is_pure_lightlike
from .models import ads_point
from .quadratic import GeometryError, as_vector, inner, q_eval


def future_unit_timelike(p):
    """Canonical future-directed unit timelike tangent (-v, u, 0, ...)/r.

    This is the normalized coordinate vector field of the cylinder angle,
    which increases toward the future.
    """
    a = ads_point(p)
    r = math.hypot(a[0], a[1])
    e0 = np.zeros_like(a)
    e0[0], e0[1] = -a[1] / r, a[0] / r
    return e0


def tangent_frame(p):
    """(e0, spatial) frame at a hyperboloid point: e0 the canonical future
    timelike direction, spatial an (n, n+2) array of unit spacelike tangents,
    all mutually orthogonal."""
    a = ads_point(p)
    e0 = future_unit_timelike(a)
    basis = [a, e0]
    dim = a.shape[0]
    for k in range(dim):
        if len(basis) == dim:
            break
        w = np.zeros(dim)
        w[k] = 1.0
        for _ in range(2):
            for b in basis:
                w = w - (inner(w, b) / q_eval(b)) * b
        qw = q_eval(w)
        if np.linalg.norm(w) < 1e-8 or qw < 1e-10:
            continue
        basis.append(w / math.sqrt(qw))
    if len(basis) != dim:
        raise GeometryError("failed to complete a tangent frame")
    return e0, np.stack(basis[2:], axis=0)


def past_direction_grid(p, m, seed=0, chi_max=3.0):
    """m future-directed unit timelike tangents at p (the curves probed
    with these directions run into the past).

    Rapidity-shell sampling cosh(chi) e0 + sinh(chi) w with (chi, w) from a
    seeded Halton sequence; the axial direction chi = 0 is always the first
    entry, since it attains the supremum for centered diamond probes.
    """
    if m < 1:
        raise GeometryError("need at least one direction")
    e0, spatial = tangent_frame(p)
    n = spatial.shape[0]
    dirs = [e0]
    if m > 1:
        pts = qmc.Halton(d=n + 1, scramble=True, seed=seed).random(m - 1)
        chi = chi_max * pts[:, 0]
        g = ndtri(np.clip(pts[:, 1:], 1e-12, 1.0 - 1e-12))
        norms = np.linalg.norm(g, axis=1)
        norms[norms == 0.0] = 1.0
        omega = (g / norms[:, None]) @ spatial
        dirs.append(np.cosh(chi)[:, None] * e0[None, :]
                    + np.sinh(chi)[:, None] * omega)
        return np.vstack([dirs[0][None, :], dirs[1]])
    return np.array(dirs)


def _exit_lengths(p, dirs, sample, bisection_tol, band):
    """Vectorized bisection for the past exit parameter of each direction."""
    a = sample.inner_with(p)
    b = sample.inner_with_many(dirs)
    lo = np.zeros(dirs.shape[0])
    hi = np.full(dirs.shape[0], math.pi)
    steps = max(1, int(math.ceil(math.log2(math.pi / bisection_tol))))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        vals = np.cos(mid)[None, :] * a[:, None] - np.sin(mid)[None, :] * b
        inside = vals.max(axis=0) < -band
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    return lo


def timelike_exit_length(p, u, sample, bisection_tol=BISECTION_TOL,
                         band=BOUNDARY_BAND):
    """Proper time to the past exit of the domain along one direction.

    ``u`` must be a unit timelike tangent at ``p`` (q(u) = -1, <p|u> = 0)
    and ``p`` must be inside the domain.  The probed curve is
    cos(s) p - sin(s) u; the returned value is the largest s for which
    every earlier point passes Klein membership.
    """
    a = ads_point(p)
    w = as_vector(u)
    if abs(q_eval(w) + 1.0) > 1e-6 or abs(inner(a, w)) > 1e-6:
        raise GeometryError("direction is not a unit timelike tangent")
    if is_pure_lightlike(sample):
        raise GeometryError("pure lightlike limit set: the domain is empty")
    if sample.inner_with(a).max() >= -band:
        raise GeometryError("probe point is not inside the domain")
    return float(_exit_lengths(a, w[None, :], sample, bisection_tol, band)[0])


def probe_exit_lengths(p, sample, m=256, seed=0, bisection_tol=BISECTION_TOL,
                       band=BOUNDARY_BAND, chi_max=3.0):
    """Direction grid at p and the past exit length along each direction."""
    a = ads_point(p)
    if is_pure_lightlike(sample):
        raise GeometryError("pure lightlike limit set: the domain is empty")
    if sample.inner_with(a).max() >= -band:
        raise GeometryError("probe point is not inside the domain")
    dirs = past_direction_grid(a, m, seed, chi_max)
    return dirs, _exit_lengths(a, dirs, sample, bisection_tol, band)


@dataclass(frozen=True)
class CtEstimate:
    """Lower-bound estimate of the cosmological time at a point."""

    value: float
    directions_used: int
    bisection_tol: float
    argmax_direction: np.ndarray
    boundary: bool = False


def cosmological_time_estimate(p, sample, m=256, seed=0, directions=None,
                               extra_directions=None,
                               bisection_tol=BISECTION_TOL,
                               band=BOUNDARY_BAND, chi_max=3.0):
    """Maximum past exit length over a deterministic direction grid.

    A lower bound of the cosmological time, reproducible for a fixed seed.
    ``directions`` replaces the default grid (used to match grids across
    isometries); ``extra_directions`` are appended to it.  Points within
    the boundary band report value 0 with the boundary flag set.
    """
    a = ads_point(p)
    if is_pure_lightlike(sample):
        raise GeometryError("pure lightlike limit set: the domain is empty")
    if sample.inner_with(a).max() >= -band:
        return CtEstimate(0.0, 0, bisection_tol, np.zeros_like(a), True)
    if directions is None:
        dirs = past_direction_grid(a, m, seed, chi_max)
    else:
        dirs = np.asarray(directions, dtype=float)
    if extra_directions is not None:
        dirs = np.vstack([dirs, np.asarray(extra_directions, dtype=float)])
    for k, u in enumerate(dirs):
        if abs(q_eval(u) + 1.0) > 1e-6 or abs(inner(a, u)) > 1e-6:
            raise GeometryError(f"direction {k} is not a unit timelike "
                                "tangent at the probe point")
    lengths = _exit_lengths(a, dirs, sample, bisection_tol, band)
    k = int(np.argmax(lengths))
    return CtEstimate(float(lengths[k]), dirs.shape[0], bisection_tol,
                      dirs[k].copy(), False)
