"""Invisible domains of sampled achronal limit sets.

A limit set is a finite sampled graph {(y_i, theta_i)}: directions on the
boundary sphere with lifted angles obeying the 1-Lipschitz bound.  The
sample is treated as the exact closed achronal set, not as a discretization
of an unknown continuum, so the envelope formulas below are exact.

The invisible domain is computed two independent ways:

* envelope picture: the band f^-(x) < theta < f^+(x) between the lower
  envelope sup_i(theta_i - d(x, y_i)) and the upper envelope
  inf_i(theta_i + d(x, y_i)) over the closed upper hemisphere;
* Klein picture: ambient points whose scalar product with every null-ray
  encoding of the sample is strictly negative.

Their agreement (away from a small boundary band) is itself one of the
toolkit's acceptance checks.  Verdicts near a boundary are three-valued:
inside / boundary / outside with a configurable band.
"""

import math

import numpy as np

from .config import ALGEBRAIC_TOL, BOUNDARY_BAND
from .causality import graph_is_achronal
from .models import (TWO_PI, ConformalAdsPoint, ads_to_conformal,
                     hemisphere_embed, null_ray_to_einstein, wrap_angle)
from .quadratic import GeometryError, RayPoint, as_vector, inner, q_eval, ray

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class AchronalSample:
    """Finite sampled 1-Lipschitz graph over directions on S^{n-1}.

    Parameters
    ----------
    ys : (m, n) array
        Unit direction vectors, m >= 2.
    thetas : (m,) array
        Lifted angles (real numbers, not reduced mod 2*pi).
    tol : float
        Tolerance for the unit-norm and Lipschitz checks.
    require_achronal : bool
        When False the Lipschitz check is skipped and the sample is left
        uncertified (used by classifiers that must accept bad input).
    """

    def __init__(self, ys, thetas, tol=ALGEBRAIC_TOL, require_achronal=True):
        ys = np.asarray(ys, dtype=float)
        thetas = np.asarray(thetas, dtype=float)
        if ys.ndim != 2 or ys.shape[0] < 2 or ys.shape[1] < 1:
            raise GeometryError("need at least two direction samples")
        if thetas.shape != (ys.shape[0],):
            raise GeometryError("one angle per direction required")
        if not (np.all(np.isfinite(ys)) and np.all(np.isfinite(thetas))):
            raise GeometryError("sample entries must be finite")
        norms = np.linalg.norm(ys, axis=1)
        if np.abs(norms - 1.0).max() > tol:
            raise GeometryError("directions must be unit vectors")
        self.ys = ys
        self.thetas = thetas
        self.lipschitz_certified = False
        if require_achronal:
            check = graph_is_achronal(ys, thetas, tol)
            if not check.ok:
                raise GeometryError(
                    "sample is not achronal: pair "
                    f"{check.witness_pair} exceeds the Lipschitz bound "
                    f"by {check.excess:.3e}")
            self.lipschitz_certified = True
        # Null-ray encodings (cos t, sin t, y)/sqrt(2), unit representatives.
        m = ys.shape[0]
        reps = np.empty((m, ys.shape[1] + 2))
        reps[:, 0] = np.cos(thetas)
        reps[:, 1] = np.sin(thetas)
        reps[:, 2:] = ys
        self._reps = reps / math.sqrt(2.0)
        self._reps_j = self._reps.copy()
        self._reps_j[:, :2] = -self._reps_j[:, :2]
        self._pure_lightlike = None

    @property
    def n(self):
        return self.ys.shape[1]

    def __len__(self):
        return self.ys.shape[0]

    def null_rays(self):
        """Unit representatives of the null-ray encodings, one per row."""
        return self._reps.copy()

    def ray_points(self):
        return [ray(r) for r in self._reps]

    def inner_with(self, z):
        """Scalar products of every sample ray with an ambient vector."""
        return self._reps_j @ as_vector(z)

    def inner_with_many(self, zs):
        """Scalar products against rows of ``zs``; sample rays index rows."""
        return self._reps_j @ np.asarray(zs, dtype=float).T

    @classmethod
    def from_null_rays(cls, rays, tol=ALGEBRAIC_TOL, require_achronal=True):
        """Rebuild a sample from null rays, lifting angles consistently.

        Angles are anchored to the first ray: every other angle is wrapped
        into (theta_0 - pi, theta_0 + pi], which recovers the honest lift
        whenever the set is achronal (lifts are unique up to a global deck
        shift).
        """
        eins = [null_ray_to_einstein(r, tol) for r in rays]
        theta0 = eins[0].theta
        thetas = np.array([theta0 + wrap_angle(e.theta - theta0)
                           for e in eins])
        ys = np.stack([e.y for e in eins], axis=0)
        return cls(ys, thetas, tol, require_achronal)


def envelope(sample, x):
    """Envelope pair (f^-, f^+) of the sample at a hemisphere point.

    f^-(x) = max_i theta_i - d(x, y_i) and f^+(x) = min_i theta_i + d(x, y_i)
    with d the spherical distance and boundary directions embedded as
    equator points (0, y).  Exact max/min over the finite sample.
    """
    lo, hi = envelope_grid(sample, np.asarray(x, dtype=float)[None, :])
    return float(lo[0]), float(hi[0])


def envelope_grid(sample, xs):
    """Vectorized envelopes at rows of ``xs`` (each a hemisphere point)."""
    xs = np.asarray(xs, dtype=float)
    if xs.shape[1] != sample.n + 1:
        raise GeometryError("hemisphere points live in R^{n+1}")
    d = np.arccos(np.clip(xs[:, 1:] @ sample.ys.T, -1.0, 1.0))
    lo = (sample.thetas[None, :] - d).max(axis=1)
    hi = (sample.thetas[None, :] + d).min(axis=1)
    return lo, hi


def contains(sample, probe, band=BOUNDARY_BAND):
    """Three-valued membership of a conformal probe in the invisible domain.

    The probe's lifted angle is compared against the envelope band at its
    hemisphere point; angles within ``band`` of either envelope are reported
    as boundary rather than inside.
    """
    lo, hi = envelope(sample, probe.disk)
    theta = probe.theta_total
    if theta <= lo - band or theta >= hi + band:
        return OUTSIDE
    if lo + band <= theta <= hi - band:
        return INSIDE
    return BOUNDARY


def is_pure_lightlike(sample, tol=ALGEBRAIC_TOL):
    """Whether some antipodal direction pair attains the maximal pi gap.

    Such samples are past/future lightcone graphs and their invisible
    domain is empty (the envelopes collapse, f^- = f^+ everywhere).
    """
    if sample._pure_lightlike is None:
        dots = sample.ys @ sample.ys.T
        gaps = np.abs(sample.thetas[:, None] - sample.thetas[None, :])
        hit = (dots <= -1.0 + 1e-12) & (np.abs(gaps - math.pi) <= tol)
        sample._pure_lightlike = bool(hit.any())
    return sample._pure_lightlike


def _unit_rep(y):
    if isinstance(y, RayPoint):
        return y.rep
    return ray(y).rep


def klein_membership(sample, y, tol=BOUNDARY_BAND):
    """Klein-picture membership: inner(y, x_i) < -tol for every sample ray.

    ``y`` must be a ray (or ambient vector) with q <= 0: a point of the
    hyperboloid's ray image or its null boundary.  Pure lightlike samples
    have empty domains and are rejected.
    """
    if is_pure_lightlike(sample):
        raise GeometryError("pure lightlike limit set: the domain is empty")
    rep = _unit_rep(y)
    if q_eval(rep) > tol:
        raise GeometryError("point is outside the closed hyperboloid image")
    return bool(np.all(sample.inner_with(rep) < -tol))


def conformal_probe(sample, y):
    """Conformal probe of a Klein point, lifted into the sample's window.

    The hyperboloid representative of the ray is converted to cylinder
    coordinates and the winding is chosen so the lifted angle falls in
    (f^-(x), f^-(x) + 2*pi]; the invisible band has width at most pi, so
    membership of the ray is equivalent to this single lift being inside.
    """
    rep = _unit_rep(y)
    q = q_eval(rep)
    if q >= -1e-14:
        raise GeometryError("expected a timelike ray (hyperboloid point)")
    c = ads_to_conformal(rep / math.sqrt(-q))
    lo, _ = envelope(sample, c.disk)
    k = math.floor((lo - c.theta) / TWO_PI) + 1
    return ConformalAdsPoint(c.theta, c.disk, k)


def convexity_probe(sample, a, b, samples=100, tol=BOUNDARY_BAND):
    """Check Klein membership along the geodesic chord between two points.

    Both endpoints must be inside the domain and joined by a spacelike
    geodesic (inner(a, b) < -1 in hyperboloid representatives); the chord
    is then sampled uniformly in arclength.  Geodesic convexity of
    invisible domains predicts True for every admissible pair.
    """
    a = as_vector(a)
    b = as_vector(b)
    for name, p in (("a", a), ("b", b)):
        if not klein_membership(sample, ray(p), tol):
            raise GeometryError(f"endpoint {name} is not inside the domain")
    if np.linalg.norm(a - b) <= 1e-12:
        return True
    c = inner(a, b)
    if c >= -1.0 - 1e-12:
        raise GeometryError("endpoints are not joined by a spacelike "
                            f"geodesic (inner = {c!r})")
    w = (b + c * a) / math.sqrt(c * c - 1.0)
    length = math.acosh(-c)
    for t in np.linspace(0.0, length, samples):
        point = math.cosh(t) * a + math.sinh(t) * w
        if not klein_membership(sample, ray(point), tol):
            return False
    return True


def boundary_directions(sample):
    """Hemisphere embeddings (0, y_i) of the sampled directions."""
    return np.stack([hemisphere_embed(y) for y in sample.ys], axis=0)
