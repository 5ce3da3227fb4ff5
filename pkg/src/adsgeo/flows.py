"""Geodesic flow on spacelike unit tangents and loxodromic dynamics.

The flow moves a unit spacelike tangent (x, v) along its geodesic:
x^t = cosh(t) x + sinh(t) v, v^t = sinh(t) x + cosh(t) v.  The group law and
the constraints q(x) = -1, q(v) = 1, <x|v> = 0 hold in closed form, so no
renormalization is ever applied.

x + v and x - v are null and represent the forward and backward limits of
the geodesic on the Einstein universe; they are flow-invariant as rays
(x^t + v^t = e^t (x + v)).  The flip (x, v) -> (x, -v) swaps them.

Loxodromic isometries are analyzed spectrally: translation length is the
log of the spectral radius, the attracting and repelling fixed rays are the
dominant eigen-rays of the matrix and its inverse.  Fixed rays exist only
for a simple, real, positive dominant eigenvalue; anything else is reported
as not loxodromic rather than resolved arbitrarily.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import ALGEBRAIC_TOL, DERIVED_TOL
from .causality import spherical_distance
from .models import null_ray_to_einstein
from .quadratic import (GeometryError, Isometry, RayPoint, as_vector,
                        chordal_distance, form_matrix, inner, q_eval, ray)


class NotLoxodromic(GeometryError):
    """Spectral radius is (numerically) 1, or no fixed ray exists."""


@dataclass(frozen=True)
class UnitSpacelikeTangent:
    """Base point x (q = -1) and unit spacelike velocity v (q = 1, v ⊥ x)."""

    x: np.ndarray
    v: np.ndarray

    @property
    def n(self):
        return self.x.shape[0] - 2


def unit_spacelike_tangent(x, v, tol=ALGEBRAIC_TOL):
    """Validated constructor for a unit spacelike tangent."""
    a, w = as_vector(x), as_vector(v)
    if abs(q_eval(a) + 1.0) > tol:
        raise GeometryError("base point is not on the hyperboloid")
    if abs(q_eval(w) - 1.0) > tol:
        raise GeometryError("velocity is not unit spacelike")
    if abs(inner(a, w)) > tol:
        raise GeometryError("velocity is not tangent at the base point")
    return UnitSpacelikeTangent(a, w)


def flow(w, t):
    """Geodesic flow for time t; exact group law up to roundoff."""
    c, s = math.cosh(t), math.sinh(t)
    return UnitSpacelikeTangent(c * w.x + s * w.v, s * w.x + c * w.v)


def flip(w):
    """The involution (x, v) -> (x, -v); swaps the two limit points."""
    return UnitSpacelikeTangent(w.x, -w.v)


def endpoint_rays(w):
    """Forward and backward limit rays (x+v, x-v); both null."""
    return ray(w.x + w.v), ray(w.x - w.v)


def limit_endpoints(w):
    """Forward and backward limits on the Einstein universe."""
    plus, minus = endpoint_rays(w)
    return null_ray_to_einstein(plus), null_ray_to_einstein(minus)


def from_endpoints(plus, minus, tol=ALGEBRAIC_TOL):
    """Unit spacelike tangent to the geodesic with the given limit rays.

    The two representatives are rescaled by a common factor to equal
    Euclidean norms with scalar product -2; the base point (P+M)/2 then
    lands on the hyperboloid and v = (P-M)/2 is unit spacelike.  The choice
    of base point is a normalization; the geodesic itself is the invariant
    object, so comparisons should go through the endpoints or the orbit.
    """
    p = plus.rep if isinstance(plus, RayPoint) else ray(plus).rep
    m = minus.rep if isinstance(minus, RayPoint) else ray(minus).rep
    s = inner(p, m)
    if s >= -tol:
        raise GeometryError("endpoints are causally related or equal "
                            f"(inner = {s!r}); no spacelike geodesic")
    lam = math.sqrt(2.0 / abs(s))
    bigp, bigm = lam * p, lam * m
    return UnitSpacelikeTangent((bigp + bigm) / 2.0, (bigp - bigm) / 2.0)


def hyperbolic_distance(a, b):
    """arccosh(-<a|b>) for two hyperboloid points, clamped at 1.

    Equals the geodesic distance when both points lie on a common totally
    geodesic hyperbolic slice; callers certify that (e.g. a shared
    orthogonal timelike vector).
    """
    return math.acosh(max(1.0, -inner(as_vector(a), as_vector(b))))


def synchronizing_shift(w1, w2, tol=ALGEBRAIC_TOL):
    """Time shift making two same-leaf orbits asymptotic.

    For geodesics sharing the forward limit ray, the plus representatives
    differ by a scale P2 = c P1; flowing w2 by an extra -log(c) aligns the
    parametrizations, after which the orbit distance decays to zero instead
    of settling at |log c|.
    """
    p1, m1 = w1.x + w1.v, w1.x - w1.v
    p2 = w2.x + w2.v
    c = inner(m1, p2) / inner(m1, p1)
    if c <= tol:
        raise GeometryError("tangents do not share a forward limit ray")
    return -math.log(c)


@dataclass(frozen=True)
class DecayReport:
    ts: np.ndarray
    distances: np.ndarray
    shift: float
    fitted_rate: float


def stable_contraction_check(w1, w2, shift=None, tmax=8.0, steps=33,
                             tol=ALGEBRAIC_TOL):
    """Distances along two orbits of the same stable leaf, with decay fit.

    Requires equal forward limit points.  Samples
    d(t) = hyperbolic_distance(flow(w1, t).x, flow(w2, t + shift).x) over a
    uniform grid and fits a log-linear rate (nan when the distances are
    already at the noise floor).  With the synchronizing shift (the default)
    the rate is the curvature rate -1.
    """
    e1, _ = limit_endpoints(w1)
    e2, _ = limit_endpoints(w2)
    sep = abs(math.remainder(e1.theta - e2.theta, 2.0 * math.pi)) \
        + spherical_distance(e1.y, e2.y)
    if sep > max(tol, 1e-7):
        raise GeometryError("tangents lie on different stable leaves")
    if shift is None:
        shift = synchronizing_shift(w1, w2)
    ts = np.linspace(0.0, tmax, steps)
    dists = np.array([hyperbolic_distance(flow(w1, t).x,
                                          flow(w2, t + shift).x)
                      for t in ts])
    usable = dists > 1e-12
    if usable.sum() >= 4:
        rate = float(np.polyfit(ts[usable], np.log(dists[usable]), 1)[0])
    else:
        rate = float("nan")
    return DecayReport(ts, dists, float(shift), rate)


@dataclass(frozen=True)
class LoxodromicData:
    attracting: RayPoint
    repelling: RayPoint
    translation_length: float


def _as_full_matrix(m):
    """Accept an Isometry, a full matrix, or a Lorentz block on (u, x).

    A bare matrix is taken at face value when it preserves the (2,n) form;
    when it instead preserves the (1,n) form diag(-1, 1, ..., 1) it is
    block-embedded to act on (u, v, x) fixing the v-axis.
    """
    if isinstance(m, Isometry):
        return np.asarray(m.matrix, dtype=float)
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise GeometryError("expected a square matrix")
    d = a.shape[0]
    j2 = np.eye(d)
    j2[0, 0] = j2[1, 1] = -1.0
    if d >= 3 and np.abs(a.T @ j2 @ a - j2).max() <= 1e-7:
        return a
    j1 = np.eye(d)
    j1[0, 0] = -1.0
    if np.abs(a.T @ j1 @ a - j1).max() <= 1e-7:
        return embed_fixing_v_axis(a)
    raise GeometryError("matrix preserves neither the (2,n) nor the "
                        "(1,n) form")


def embed_fixing_v_axis(block):
    """Block-embed an (n+1) matrix on coordinates (u, x) into (u, v, x)."""
    block = np.asarray(block, dtype=float)
    d = block.shape[0] + 1
    m = np.zeros((d, d))
    m[1, 1] = 1.0
    m[0, 0] = block[0, 0]
    m[0, 2:] = block[0, 1:]
    m[2:, 0] = block[1:, 0]
    m[2:, 2:] = block[1:, 1:]
    return m


def _canonical_sign(vec):
    k = int(np.argmax(np.abs(vec)))
    return vec if vec[k] > 0 else -vec


def _dominant_ray(m, tol):
    try:
        vals, vecs = np.linalg.eig(m)
    except np.linalg.LinAlgError:
        return _dominant_ray_power(m, tol)
    moduli = np.abs(vals)
    rho = float(moduli.max())
    near_top = moduli >= rho * (1.0 - 1e-9)
    if near_top.sum() > 1:
        raise NotLoxodromic("dominant eigenvalue is not simple")
    k = int(np.argmax(moduli))
    lam = vals[k]
    if abs(lam.imag) > 1e-9 * rho or lam.real <= 0.0:
        raise NotLoxodromic("dominant eigenvalue is not real positive; "
                            "no fixed ray")
    vec = np.real(vecs[:, k])
    vec = vec / np.linalg.norm(vec)
    if abs(q_eval(vec)) > max(tol, 1e-8):
        raise NotLoxodromic("dominant eigenvector is not null")
    return rho, _canonical_sign(vec)


def _dominant_ray_power(m, tol, steps=20000):
    # Fallback when the QR eigensolver fails to converge.
    v = np.ones(m.shape[0]) / math.sqrt(m.shape[0])
    lam = 1.0
    for _ in range(steps):
        w = m @ v
        lam = np.linalg.norm(w)
        w = w / lam
        if np.linalg.norm(w - v) < 1e-14:
            v = w
            break
        v = w
    if abs(q_eval(v)) > max(tol, 1e-8):
        raise NotLoxodromic("power iteration did not reach a null ray")
    return float(lam), _canonical_sign(v)


def loxodromic_analysis(m, tol=ALGEBRAIC_TOL):
    """Fixed rays and translation length of a loxodromic isometry.

    The attracting ray is the dominant eigen-ray (eigenvalue e^T with
    T = log of the spectral radius), the repelling ray the dominant
    eigen-ray of the inverse; both are automatically null.  The repelling
    sign is chosen so the two rays bound a spacelike geodesic
    (inner < 0).  Spectral radius within tol of 1 is not loxodromic.
    """
    full = _as_full_matrix(m)
    rho, avec = _dominant_ray(full, tol)
    if rho <= 1.0 + tol:
        raise NotLoxodromic(f"spectral radius {rho!r} is not > 1")
    j = form_matrix(full.shape[0] - 2)
    rho_inv, rvec = _dominant_ray(j @ full.T @ j, tol)
    if abs(math.log(rho_inv) - math.log(rho)) > DERIVED_TOL * 10:
        raise NotLoxodromic("expansion and contraction rates disagree")
    s = inner(avec, rvec)
    if abs(s) <= tol:
        raise GeometryError("fixed rays are not joined by a spacelike "
                            "geodesic")
    if s > 0:
        rvec = -rvec
    return LoxodromicData(ray(avec), ray(rvec), math.log(rho))


def project_to_cone(z):
    """Nearest-in-angle null vector: equalize time and space part norms."""
    a = as_vector(z)
    tn = math.hypot(a[0], a[1])
    sn = float(np.linalg.norm(a[2:]))
    if tn == 0.0 or sn == 0.0:
        raise GeometryError("vector has no cone projection")
    m = 0.5 * (tn + sn)
    out = a.copy()
    out[:2] *= m / tn
    out[2:] *= m / sn
    return out


def power_iterate(m, start, steps=1):
    """Iterate a matrix on a ray, renormalizing each step."""
    full = _as_full_matrix(m)
    r = start if isinstance(start, RayPoint) else ray(start)
    for _ in range(steps):
        r = ray(full @ r.rep)
    return r


def power_iteration_distances(m, start, steps):
    """Chordal distances to the limit along a power-iteration orbit.

    Returns (limit_ray, distances); the limit is the ray after ``steps``
    iterations, distances are measured after each step.
    """
    full = _as_full_matrix(m)
    r = start if isinstance(start, RayPoint) else ray(start)
    orbit = []
    for _ in range(steps):
        r = ray(full @ r.rep)
        orbit.append(r)
    limit = orbit[-1]
    return limit, np.array([chordal_distance(o, limit) for o in orbit])
