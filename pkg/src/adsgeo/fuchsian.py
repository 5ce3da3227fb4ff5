"""Fuchsian representations and numeric certificates of Anosov expansion.

A Fuchsian representation fixes a timelike vector V of the ambient space and
so preserves the hyperbolic hypersurface of V-orthogonal hyperboloid points.
Its limit set is the acausal sphere of null rays in the orthogonal
complement of V.

The expansion machinery works on the sliced cone above a hyperboloid point
x: the section s_x(y) = -y / <y|x> carries a boundary point (null ray) to
its representative with <.|x> = -1, and the Wick-rotated metric

    g^{x,V}(w) = q(w', w') + 2 <w'|tau>^2,     w' = d_y s_x (w),

with tau the unit timelike tangent obtained from V by removing its component
along the geodesic direction, is Riemannian on the boundary sphere.  Flowing
the base point along a geodesic with forward endpoint zeta multiplies this
metric by exactly exp(2t) (and by exp(-2t) at the backward endpoint), which
is the quantitative Anosov property that the acceptance suite certifies.

Certificates for candidate quasi-Fuchsian data check the conclusion's
predicates on samples: acausality, the Lipschitz graph property with
full-sphere coverage, nonemptiness of the invisible domain, and generator
invariance.  A loxodromic generator never permutes a finite sample
literally, so invariance is checked as achronal consistency of the image
rays against the sampled graph (they must stay on its achronal closure),
which is exact for genuinely invariant continua and catches seeded breaks
with a witness pair.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .config import ALGEBRAIC_TOL, BOUNDARY_BAND
from .causality import ACAUSAL, graph_is_achronal, set_causal_class
from .flows import (embed_fixing_v_axis, flow, loxodromic_analysis,
                    power_iterate, power_iteration_distances,
                    project_to_cone)
from .invisible import (AchronalSample, INSIDE, contains, envelope_grid,
                        is_pure_lightlike)
from .models import ConformalAdsPoint, null_ray_to_einstein
from .quadratic import (GeometryError, Isometry, as_vector, certify_isometry,
                        chordal_distance, inner, q_eval, ray)
from .sampling import hemisphere_grid, sphere_grid


def lorentz_form_residual(b):
    """max |B^T J B - J| against the (1,n) form diag(-1, 1, ..., 1)."""
    b = np.asarray(b, dtype=float)
    j = np.eye(b.shape[0])
    j[0, 0] = -1.0
    return float(np.abs(b.T @ j @ b - j).max())


def fuchsian_embed(b, tol=ALGEBRAIC_TOL):
    """Embed an identity-component Lorentz matrix on (u, x) into the full
    group, fixing the v-axis; the result is certified."""
    b = np.asarray(b, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 2:
        raise GeometryError("expected a square matrix on (u, x) coordinates")
    res = lorentz_form_residual(b)
    if res > tol:
        raise GeometryError(f"block is not a (1,n) isometry: residual {res:.3e}")
    if abs(float(np.linalg.det(b)) - 1.0) > tol or b[0, 0] <= 0.0:
        raise GeometryError("block is outside the identity component")
    return certify_isometry(embed_fixing_v_axis(b), tol)


@dataclass(frozen=True)
class FuchsianRep:
    """Generators of an isometry group with a common fixed point V."""

    v_axis: np.ndarray
    generators: Tuple[Isometry, ...]

    @property
    def n(self):
        return self.v_axis.shape[0] - 2


def fuchsian_rep(blocks, tol=ALGEBRAIC_TOL):
    """Build a representation from Lorentz blocks; V is the v-axis."""
    gens = tuple(fuchsian_embed(b, tol) for b in blocks)
    if not gens:
        raise GeometryError("need at least one generator")
    dim = gens[0].matrix.shape[0]
    v = np.zeros(dim)
    v[1] = 1.0
    return FuchsianRep(v, gens)


def validate_rep(rep, tol=1e-12):
    """Check q(V) = -1 and that every generator fixes V."""
    v = as_vector(rep.v_axis)
    if abs(q_eval(v) + 1.0) > 1e-9:
        raise GeometryError("V is not a unit timelike vector")
    for k, g in enumerate(rep.generators):
        res = float(np.abs(g.apply(v) - v).max())
        if res > tol * (1.0 + float(np.abs(g.matrix).max())):
            raise GeometryError(f"generator {k} moves V by {res:.3e}")
    return rep


def conjugate_rep(rep, g, tol=ALGEBRAIC_TOL):
    """Conjugated representation g . rep . g^{-1} with fixed point g(V)."""
    ginv = g.inverse()
    gens = tuple(certify_isometry(g.matrix @ h.matrix @ ginv.matrix,
                                  max(tol, 1e-8))
                 for h in rep.generators)
    return FuchsianRep(g.apply(rep.v_axis), gens)


def section_pushforward(x, y, w):
    """Derivative of the section s_x(y) = -y / <y|x> at y in direction w.

        d_y s_x (w) = -w / <y|x> + y <w|x> / <y|x>^2

    Kills the radial direction (w = y maps to 0) and is homogeneous of
    degree zero in (y, w).  Undefined on the polar hyperplane <y|x> = 0.
    """
    a, yy, ww = as_vector(x), as_vector(y), as_vector(w)
    c = inner(yy, a)
    if abs(c) <= 1e-13:
        raise GeometryError("y lies on the polar hyperplane of x")
    return -ww / c + yy * (inner(ww, a) / (c * c))


def g_metric(x, v_axis, y, w, tol=ALGEBRAIC_TOL):
    """Wick-rotated boundary metric at the ray of y, pulled to the chart
    of x, evaluated on the cone-tangent w.

    The section carries y to zeta = x + v with v the unit spacelike geodesic
    direction; tau = (V - <V|v> v) / sqrt(1 + <V|v>^2) is the unit timelike
    tangent (the printed normalization is divided by sqrt so q(tau) = -1),
    and the value is q(w', w') + 2 <w'|tau>^2 for the pushforward w'.
    Positive for non-radial w, zero on the radial direction, and invariant
    under (y, w) -> (lam y, lam w + mu y).
    """
    a = as_vector(x)
    vv = as_vector(v_axis)
    yy = as_vector(y)
    ww = as_vector(w)
    if abs(q_eval(vv) + 1.0) > tol or abs(inner(a, vv)) > tol:
        raise GeometryError("V must be unit timelike and orthogonal to x")
    if abs(q_eval(a) + 1.0) > tol:
        raise GeometryError("x is not on the hyperboloid")
    scale = float(np.linalg.norm(yy))
    if abs(q_eval(yy)) > tol * scale * scale:
        raise GeometryError("y is not a cone representative")
    if abs(inner(ww, yy)) > math.sqrt(tol) * scale * (1.0 + np.linalg.norm(ww)):
        raise GeometryError("w is not tangent to the cone at y")
    c = inner(yy, a)
    if abs(c) <= 1e-13:
        raise GeometryError("y lies on the polar hyperplane of x")
    zeta = -yy / c
    vdir = zeta - a
    cv = inner(vv, vdir)
    tau = (vv - cv * vdir) / math.sqrt(1.0 + cv * cv)
    wp = section_pushforward(a, yy, ww)
    return q_eval(wp) + 2.0 * inner(wp, tau) ** 2


def cone_tangent_at(zeta, anchor, seed_vector):
    """Project a vector to the cone tangent space at zeta.

    Subtracts the right multiple of ``anchor`` (any vector with
    <anchor|zeta> != 0, e.g. the base point x) so the result pairs to zero
    with zeta.
    """
    z, an, r = as_vector(zeta), as_vector(anchor), as_vector(seed_vector)
    c = inner(an, z)
    if abs(c) <= 1e-13:
        raise GeometryError("anchor pairs to zero with zeta")
    return r - (inner(r, z) / c) * an


def default_v_axis(dim):
    v = np.zeros(dim)
    v[1] = 1.0
    return v


def expansion_ratio(w0, t, wtan, v_axis=None, endpoint="plus",
                    tol=ALGEBRAIC_TOL):
    """Measured growth of the boundary metric along the geodesic flow.

    For a tangent w0 = (x, v) with both legs orthogonal to V, the metric at
    the forward endpoint zeta = x + v grows by exactly exp(2t) when the base
    point flows for time t; at the backward endpoint zeta = x - v it decays
    by exp(-2t).  ``wtan`` is any non-radial cone tangent at the chosen
    endpoint representative.
    """
    if endpoint not in ("plus", "minus"):
        raise GeometryError("endpoint must be 'plus' or 'minus'")
    vv = default_v_axis(w0.x.shape[0]) if v_axis is None else as_vector(v_axis)
    if abs(inner(w0.x, vv)) > tol or abs(inner(w0.v, vv)) > tol:
        raise GeometryError("tangent legs are not orthogonal to V")
    zeta = w0.x + w0.v if endpoint == "plus" else w0.x - w0.v
    base = g_metric(w0.x, vv, zeta, wtan, tol)
    if base <= 1e-12:
        raise GeometryError("wtan is radial: zero metric value")
    moved = g_metric(flow(w0, t).x, vv, zeta, wtan, tol)
    return moved / base


@dataclass(frozen=True)
class FixedPointCertificate:
    trials: int
    converged: int
    mean_step_factor: float


def attractive_fixed_point_ein(m, trials=50, steps=60, seed=0,
                               tol=ALGEBRAIC_TOL):
    """Attracting fixed point on the Einstein universe, with certificate.

    Runs the spectral analysis, then certifies attractivity dynamically:
    random null rays near the fixed ray are iterated and must converge back
    to it.  Uniqueness is the simplicity of the dominant eigenvalue, which
    the spectral analysis enforces.
    """
    lox = loxodromic_analysis(m, tol)
    ein = null_ray_to_einstein(lox.attracting)
    rng = np.random.default_rng(seed)
    converged = 0
    factors = []
    for _ in range(trials):
        z = lox.attracting.rep + 0.05 * rng.standard_normal(
            lox.attracting.rep.shape[0])
        start = ray(project_to_cone(z))
        _, dists = power_iteration_distances(m, start, steps)
        final = chordal_distance(power_iterate(m, start, steps),
                                 lox.attracting)
        if final <= 1e-9:
            converged += 1
        usable = dists[(dists > 1e-12) & (dists < 0.5)]
        if usable.shape[0] >= 3:
            factors.extend(usable[1:] / usable[:-1])
    mean_factor = float(np.mean(factors)) if factors else float("nan")
    return ein, FixedPointCertificate(trials, converged, mean_factor)


def orthogonal_null_frame(v_axis, tol=ALGEBRAIC_TOL):
    """Timelike + spacelike frame of the orthogonal complement of V.

    Returns (t, S) with t the future-sheet unit timelike vector and S an
    (n, n+2) array of unit spacelike vectors, all orthogonal to each other
    and to V; the null rays t + y.S, |y| = 1, sweep the limit sphere.
    """
    v = as_vector(v_axis)
    if abs(q_eval(v) + 1.0) > tol:
        raise GeometryError("V must be unit timelike")
    dim = v.shape[0]
    basis = [v]
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
    time = [b for b in basis[1:] if q_eval(b) < 0]
    space = [b for b in basis[1:] if q_eval(b) > 0]
    if len(time) != 1 or len(space) != dim - 2:
        raise GeometryError("complement of V has the wrong signature")
    t = time[0]
    k = int(np.argmax(np.abs(t)))
    if t[k] < 0:
        t = -t
    return t, np.stack(space, axis=0)


def fuchsian_limit_set(rep, m=64, tol=ALGEBRAIC_TOL):
    """Sampled limit sphere of a Fuchsian representation.

    Quasi-uniform null rays t + y.S on the future sheet of the cone of the
    orthogonal complement of V; for the default V this is the constant
    graph theta = 0 over the boundary sphere.  The sample is acausal and
    achronally consistent with every generator image.
    """
    t, space = orthogonal_null_frame(rep.v_axis, tol)
    dirs = sphere_grid(rep.n, m)
    rays = t[None, :] + dirs @ space
    return AchronalSample.from_null_rays(rays, tol)


def sample_consistency_gap(sample, rays):
    """Worst achronal violation of candidate rays against the sample.

    Returns (gap, pair): the largest scalar product between a candidate ray
    and a sample ray and its (candidate, sample) index pair.  gap <= 0
    means every candidate stays on the sampled graph's achronal closure.
    """
    rays = np.asarray(rays, dtype=float)
    reps = rays / np.linalg.norm(rays, axis=1)[:, None]
    vals = sample.inner_with_many(reps)
    k = int(np.argmax(vals))
    i_sample, j_ray = np.unravel_index(k, vals.shape)
    return float(vals[i_sample, j_ray]), (int(j_ray), int(i_sample))


@dataclass(frozen=True)
class CertificateReport:
    """Four-predicate quasi-Fuchsian certificate with failure witnesses."""

    acausal: bool
    lipschitz_graph: bool
    domain_nonempty: bool
    generator_invariance: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return (self.acausal and self.lipschitz_graph
                and self.domain_nonempty and self.generator_invariance)

    def to_dict(self):
        return {
            "acausal": self.acausal,
            "lipschitz_graph_full_sphere": self.lipschitz_graph,
            "domain_nonempty": self.domain_nonempty,
            "generator_invariance": self.generator_invariance,
            "passed": self.passed,
            "witnesses": self.witnesses,
        }


def quasi_fuchsian_certificate(generators, sample, band=BOUNDARY_BAND,
                               coverage_factor=4.0, probe_grid=128):
    """Check the quasi-Fuchsian predicates on sampled data.

    (a) the sample's null rays are pairwise acausal;
    (b) it is a 1-Lipschitz graph covering the full boundary sphere within
        the sample's own spacing (times ``coverage_factor``);
    (c) it is not pure lightlike and a witness probe lies strictly inside
        the invisible domain;
    (d) every generator maps the rays into the sampled graph's achronal
        closure (largest cross scalar product at most ``band``).

    ``generators`` may be a FuchsianRep or any iterable of certified
    isometries.  Witnesses for each failed predicate are collected in the
    report.
    """
    if isinstance(generators, FuchsianRep):
        gens = generators.generators
    else:
        gens = tuple(generators)
    for g in gens:
        if not isinstance(g, Isometry) or not g.certified:
            raise GeometryError("generators must be certified isometries")
    witnesses = {}

    cls = set_causal_class(sample.null_rays(), max(band, 1e-12))
    acausal = cls.value == ACAUSAL
    if not acausal:
        witnesses["acausal"] = {"pair": list(cls.witness_pair),
                                "inner": cls.witness_inner,
                                "class": cls.value}

    check = graph_is_achronal(sample, tol=band)
    ref = sphere_grid(sample.n, max(64, len(sample)))
    dmat = np.arccos(np.clip(ref @ sample.ys.T, -1.0, 1.0))
    coverage = float(dmat.min(axis=1).max())
    own = np.arccos(np.clip(sample.ys @ sample.ys.T, -1.0, 1.0))
    np.fill_diagonal(own, np.inf)
    spacing = float(np.median(own.min(axis=1)))
    graph_ok = check.ok and coverage <= coverage_factor * spacing
    if not graph_ok:
        witnesses["lipschitz_graph"] = {
            "lipschitz_ok": check.ok,
            "pair": list(check.witness_pair) if check.witness_pair else None,
            "excess": check.excess,
            "coverage_radius": coverage,
            "spacing": spacing,
        }

    pure = is_pure_lightlike(sample)
    nonempty = False
    if not pure:
        probes = hemisphere_grid(sample.n, probe_grid)
        lo, hi = envelope_grid(sample, probes)
        k = int(np.argmax(hi - lo))
        if hi[k] - lo[k] > 2.0 * band:
            probe = ConformalAdsPoint(0.5 * (lo[k] + hi[k]), probes[k], 0)
            nonempty = contains(sample, probe, band) == INSIDE
            if nonempty:
                witnesses["domain_witness"] = {
                    "theta": probe.theta,
                    "disk": probes[k].tolist(),
                }
    if pure or not nonempty:
        witnesses["domain_nonempty"] = {"pure_lightlike": pure}

    invariant = True
    for k, g in enumerate(gens):
        image = (g.matrix @ sample.null_rays().T).T
        gap, pair = sample_consistency_gap(sample, image)
        if gap > band:
            invariant = False
            witnesses.setdefault("generator_invariance", {})[str(k)] = {
                "pair": list(pair), "inner": gap}

    return CertificateReport(acausal, graph_ok, not pure and nonempty,
                             invariant, witnesses)
