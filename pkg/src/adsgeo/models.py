"""Coordinate models of anti-de Sitter space and its conformal boundary.

Three pictures are wired together:

* the hyperboloid {q = -1} in R^{2,n}, points stored as ambient vectors;
* the conformal cylinder: a circle angle theta = atan2(v, u) paired with a
  point of the open upper hemisphere of S^n (a unit vector in R^{n+1} with
  positive first component), which is the picture where causality reads off
  the flat metric -dtheta^2 + ds^2;
* the Klein picture: rays of R^{2,n}, with the Einstein universe Ein_n
  realized as the null rays.

Universal covers never store unbounded angles alone: points carry a base
angle plus an integer winding, so deck transformations are exact integer
arithmetic.  theta increases toward the future.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import ALGEBRAIC_TOL
from .quadratic import (GeometryError, RayPoint, as_vector, certify_isometry,
                        classify, form_matrix, inner, q_eval, ray, LIGHTLIKE)

TWO_PI = 2.0 * math.pi


def wrap_angle(theta):
    """Reduce an angle to the branch (-pi, pi]."""
    w = math.fmod(theta, TWO_PI)
    if w > math.pi:
        w -= TWO_PI
    elif w <= -math.pi:
        w += TWO_PI
    return w


def unit_sphere_vector(y, tol=1e-9, name="y"):
    a = np.asarray(y, dtype=float)
    if a.ndim != 1 or not np.all(np.isfinite(a)):
        raise GeometryError(f"{name} must be a finite vector")
    if abs(np.linalg.norm(a) - 1.0) > tol:
        raise GeometryError(f"{name} must be a unit vector")
    return a


@dataclass(frozen=True)
class ConformalAdsPoint:
    """Cylinder coordinates (theta, hemisphere point) of an AdS point.

    ``disk`` is a unit vector in R^{n+1} with disk[0] > 0 (open upper
    hemisphere); disk[0] = 0 is tolerated only where a boundary point is
    explicitly meant.  ``winding`` lifts theta to the universal cover:
    the honest angle is ``theta_total = theta + 2*pi*winding``.
    """

    theta: float
    disk: np.ndarray
    winding: int = 0

    @property
    def theta_total(self):
        return self.theta + TWO_PI * self.winding

    @property
    def n(self):
        return self.disk.shape[0] - 1


@dataclass(frozen=True)
class EinPoint:
    """Point of the Einstein universe Ein_n: a circle angle in (-pi, pi]
    and a direction on S^{n-1}.  Equivalently a null ray of R^{2,n}."""

    theta: float
    y: np.ndarray

    @property
    def n(self):
        return self.y.shape[0]


@dataclass(frozen=True)
class UniversalPoint:
    """Point of the cyclic cover of Ein_n: base angle plus integer winding."""

    theta: float
    winding: int
    y: np.ndarray

    @property
    def theta_total(self):
        return self.theta + TWO_PI * self.winding

    def project(self):
        return EinPoint(wrap_angle(self.theta_total), self.y)


def lift(e, winding=0):
    """Lift an Einstein point to the cyclic cover with the given winding."""
    return UniversalPoint(e.theta, winding, e.y)


def deck(u, k):
    """Apply the k-th deck transformation: theta -> theta + 2*pi*k.

    k = 1 moves every point strictly to its future.
    """
    return UniversalPoint(u.theta, u.winding + int(k), u.y)


def antipode(e):
    """Antipodal involution of Ein_n: (theta, y) -> (theta + pi, -y)."""
    return EinPoint(wrap_angle(e.theta + math.pi), -e.y)


def ads_point(x, tol=ALGEBRAIC_TOL):
    """Validate q(x) = -1 and return the coordinate array."""
    a = as_vector(x)
    if abs(q_eval(a) + 1.0) > tol:
        raise GeometryError(f"not on the hyperboloid: q = {q_eval(a)!r}")
    return a


def ads_to_conformal(p, tol=ALGEBRAIC_TOL):
    """Cylinder coordinates of a hyperboloid point.

    With r = sqrt(u^2 + v^2) (always >= 1 on the hyperboloid) the point maps
    to theta = atan2(v, u) and the hemisphere point (1/r, x_1/r, ..., x_n/r).
    """
    a = ads_point(p, tol)
    r = math.hypot(a[0], a[1])
    theta = math.atan2(a[1], a[0])
    disk = np.concatenate(([1.0 / r], a[2:] / r))
    disk.flags.writeable = False
    return ConformalAdsPoint(theta, disk, 0)


def conformal_to_ads(c, tol=ALGEBRAIC_TOL):
    """Inverse of ads_to_conformal; rejects boundary input disk[0] = 0."""
    disk = unit_sphere_vector(c.disk, tol, "disk")
    if disk[0] <= tol:
        raise GeometryError("hemisphere point lies on the boundary equator")
    r = 1.0 / disk[0]
    out = np.concatenate(([r * math.cos(c.theta), r * math.sin(c.theta)],
                          r * disk[1:]))
    return out


def null_ray_to_einstein(r, tol=ALGEBRAIC_TOL):
    """Einstein-universe coordinates of a null ray.

    The representative is rescaled so u^2 + v^2 = 1; then theta = atan2(v, u)
    and y is the normalized spatial part.  Scale-invariant by construction.
    """
    if isinstance(r, RayPoint):
        a = r.rep
    else:
        a = ray(r).rep
    if classify(a, tol) != LIGHTLIKE:
        raise GeometryError("ray is not null")
    tnorm = math.hypot(a[0], a[1])
    theta = math.atan2(a[1], a[0])
    y = a[2:] / np.linalg.norm(a[2:])
    y.flags.writeable = False
    return EinPoint(theta, y)


def ein_to_null_ray(e):
    """Null ray (cos theta, sin theta, y) of an Einstein point."""
    return ray(np.concatenate(([math.cos(e.theta), math.sin(e.theta)], e.y)))


def hemisphere_embed(y):
    """Embed a boundary direction y in S^{n-1} as the equator point (0, y)."""
    return np.concatenate(([0.0], np.asarray(y, dtype=float)))


def normalizer_to_origin(base, tol=ALGEBRAIC_TOL):
    """Certified isometry sending a hyperboloid point to (1, 0, ..., 0).

    Builds a q-orthonormal basis starting from the base point by
    Gram-Schmidt against the indefinite form (two passes for stability),
    orders it (timelike, timelike, spacelike...), fixes the time
    orientation and orientation by sign flips, and inverts with J B^T J.
    """
    b0 = ads_point(base, tol)
    dim = b0.shape[0]
    basis = [b0]
    for k in range(dim):
        if len(basis) == dim:
            break
        w = np.zeros(dim)
        w[k] = 1.0
        for _ in range(2):
            for b in basis:
                w = w - (inner(w, b) / q_eval(b)) * b
        qw = q_eval(w)
        if np.linalg.norm(w) < 1e-8 or abs(qw) < 1e-10:
            continue
        basis.append(w / math.sqrt(abs(qw)))
    if len(basis) != dim:
        raise GeometryError("failed to complete an orthonormal basis")
    time = [b for b in basis if q_eval(b) < 0]
    space = [b for b in basis if q_eval(b) > 0]
    if len(time) != 2:
        raise GeometryError("degenerate basis: wrong signature split")
    cols = np.stack([time[0], time[1]] + space, axis=1)
    if np.linalg.det(cols[:2, :2]) < 0:
        cols[:, 1] = -cols[:, 1]
    if np.linalg.det(cols) < 0:
        cols[:, 2] = -cols[:, 2]
    j = form_matrix(dim - 2)
    return certify_isometry(j @ cols.T @ j, tol=max(tol, 1e-9))


def affine_chart(base, y, normalizer=None, tol=ALGEBRAIC_TOL):
    """Affine coordinates (v/u, x_1/u, ..., x_n/u) of y in the chart at base.

    The base point is first moved to (1, 0, ..., 0) by a certified isometry
    (computed here unless one is supplied), after which the chart is defined
    on the half-space u > 0.  The hyperboloid maps into the solid
    {-t^2 + |xbar|^2 < 1} and its null boundary onto {-t^2 + |xbar|^2 = 1}.
    """
    if normalizer is None:
        normalizer = normalizer_to_origin(base, tol)
    z = normalizer.apply(as_vector(y))
    if z[0] <= tol:
        raise GeometryError("point lies outside the chart half-space u > 0")
    return z[1:] / z[0]


def normalize_tangent(x, v, tol=ALGEBRAIC_TOL):
    """Orthogonalize v against a hyperboloid point and scale q(v) to +-1.

    Returns the adjusted vector; null directions (|q| below tol after
    orthogonalization) are returned unscaled.
    """
    a = ads_point(x, tol)
    w = as_vector(v) + inner(v, a) * a
    qw = q_eval(w)
    if abs(qw) <= tol:
        return w
    return w / math.sqrt(abs(qw))


def geodesic_point(x, v, t, tol=ALGEBRAIC_TOL):
    """Point at parameter t on the geodesic through x with velocity v.

    Requires <x|v> = 0 and q(v) normalized to -1, 0 or +1.  Closed forms:
    spacelike cosh(t) x + sinh(t) v, timelike cos(t) x + sin(t) v (proper
    time), null x + t v.  The first two stay on the hyperboloid exactly up
    to roundoff.
    """
    a = ads_point(x, tol)
    w = as_vector(v)
    if abs(inner(a, w)) > tol:
        raise GeometryError("velocity is not tangent: <x|v> != 0")
    qv = q_eval(w)
    if abs(qv - 1.0) <= tol:
        return math.cosh(t) * a + math.sinh(t) * w
    if abs(qv + 1.0) <= tol:
        return math.cos(t) * a + math.sin(t) * w
    if abs(qv) <= tol:
        return a + t * w
    raise GeometryError(f"velocity is not normalized: q(v) = {qv!r}")
