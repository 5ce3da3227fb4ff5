"""Causal relations on the Einstein universe and the Klein model.

Two points of the cyclic cover are causally related exactly when the gap
between their angles is at least the spherical distance between their
directions; the lightcone is the equality locus.  In the Klein picture the
same relation, for a boundary ray against a point of a common affine domain,
is the sign of the ambient scalar product: positive = timelike related,
zero = lightlike, negative = no causal curve.

Achronal sets are graphs of 1-Lipschitz angle functions over subsets of the
boundary sphere; on finite samples achronality and acausality reduce to the
pairwise scalar-product signs of the null-ray encodings.

Sign tests are exact in theory but fuzzy in floating point, so every
classifier takes an absolute tolerance band; callers probing near a cone
should keep a margin away from the band.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .config import ALGEBRAIC_TOL
from .models import wrap_angle
from .quadratic import GeometryError, RayPoint, classify, inner, LIGHTLIKE

TIMELIKE_RELATED = "timelike_related"
LIGHTLIKE_RELATED = "lightlike_related"
UNRELATED = "unrelated"

FIRST_PAST = "first_past"
FIRST_FUTURE = "first_future"
NOT_APPLICABLE = "not_applicable"

ACAUSAL = "acausal"
ACHRONAL_NOT_ACAUSAL = "achronal_not_acausal"
NOT_ACHRONAL = "not_achronal"


@dataclass(frozen=True)
class CausalRelation:
    kind: str
    time_order: str


def _order(delta):
    # Ties (identical points) count as weakly past.
    return FIRST_PAST if delta >= 0.0 else FIRST_FUTURE


def spherical_distance(y1, y2):
    """Great-circle distance between unit vectors, clamped into [0, pi].

    The dot product is clipped to [-1, 1] before arccos; without the clamp,
    roundoff at antipodes pushes it out of the domain.
    """
    a = np.asarray(y1, dtype=float)
    b = np.asarray(y2, dtype=float)
    return float(math.acos(min(1.0, max(-1.0, float(a @ b)))))


def universal_relation(p, q, tol=ALGEBRAIC_TOL):
    """Causal relation between two points of the cyclic cover.

    With gap = |theta_q - theta_p| and d the spherical distance of the
    directions: gap > d is timelike, |gap - d| <= tol is lightlike,
    otherwise unrelated.  The time order is the sign of theta_q - theta_p
    (first argument in the past when positive).
    """
    if p.y.shape != q.y.shape:
        raise GeometryError("dimension mismatch")
    delta = q.theta_total - p.theta_total
    d = spherical_distance(p.y, q.y)
    gap = abs(delta)
    if abs(gap - d) <= tol:
        return CausalRelation(LIGHTLIKE_RELATED, _order(delta))
    if gap > d:
        return CausalRelation(TIMELIKE_RELATED, _order(delta))
    return CausalRelation(UNRELATED, NOT_APPLICABLE)


def _phase(rep):
    return math.atan2(rep[1], rep[0])


def klein_relation(x, y, tol=ALGEBRAIC_TOL):
    """Causal relation from the scalar-product sign in the Klein picture.

    ``x`` is a null ray on the affine boundary, ``y`` a ray in the closure
    of a common affine domain (the caller certifies this, e.g. through
    affine_chart).  inner > tol: timelike related; |inner| <= tol:
    lightlike; inner < -tol: unrelated.  The scalar product carries no time
    orientation, so the order is read off the minimal-wrap difference of
    the (u,v) phases, which is the honest lift inside one affine domain.
    """
    if not isinstance(x, RayPoint) or not isinstance(y, RayPoint):
        raise GeometryError("klein_relation expects RayPoint arguments")
    s = inner(x.rep, y.rep)
    if abs(s) <= tol:
        kind = LIGHTLIKE_RELATED
    elif s > tol:
        kind = TIMELIKE_RELATED
    else:
        return CausalRelation(UNRELATED, NOT_APPLICABLE)
    delta = wrap_angle(_phase(y.rep) - _phase(x.rep))
    return CausalRelation(kind, _order(delta))


@dataclass(frozen=True)
class ClassReport:
    value: str
    witness_pair: Optional[Tuple[int, int]] = None
    witness_inner: Optional[float] = None


def _ray_matrix(rays, tol):
    reps = []
    for k, r in enumerate(rays):
        rep = r.rep if isinstance(r, RayPoint) else np.asarray(r, dtype=float)
        if classify(rep, tol) != LIGHTLIKE:
            raise GeometryError(f"member {k} is not a null ray")
        reps.append(rep / np.linalg.norm(rep))
    return np.stack(reps, axis=0)


def set_causal_class(rays, tol=ALGEBRAIC_TOL):
    """Classify a finite set of null rays by pairwise scalar-product signs.

    All pairs strictly negative: acausal.  All non-positive with at least
    one vanishing: achronal but not acausal.  Any positive pair: not
    achronal, witnessed by the smallest offending index pair.  Duplicate
    rays are an input error, not a causal violation.
    """
    reps = _ray_matrix(rays, tol)
    m = reps.shape[0]
    if m < 2:
        raise GeometryError("need at least two rays")
    gram = reps @ np.diag([-1.0, -1.0] + [1.0] * (reps.shape[1] - 2)) @ reps.T
    iu, ju = np.triu_indices(m, k=1)
    vals = gram[iu, ju]
    dup = np.linalg.norm(reps[iu] - reps[ju], axis=1) <= 10.0 * tol
    if np.any(dup):
        k = int(np.argmax(dup))
        raise GeometryError(f"duplicate rays at indices ({iu[k]}, {ju[k]})")
    bad = vals > tol
    if np.any(bad):
        k = int(np.argmax(bad))  # smallest (i, j) in row-major triangle order
        return ClassReport(NOT_ACHRONAL, (int(iu[k]), int(ju[k])),
                           float(vals[k]))
    light = np.abs(vals) <= tol
    if np.any(light):
        k = int(np.argmax(light))
        return ClassReport(ACHRONAL_NOT_ACAUSAL, (int(iu[k]), int(ju[k])),
                           float(vals[k]))
    return ClassReport(ACAUSAL)


@dataclass(frozen=True)
class GraphCheck:
    ok: bool
    witness_pair: Optional[Tuple[int, int]] = None
    excess: float = 0.0


def graph_is_achronal(ys, thetas=None, tol=ALGEBRAIC_TOL):
    """Check the 1-Lipschitz bound |theta_i - theta_j| <= d(y_i, y_j) + tol.

    Accepts either two arrays (directions, lifted angles) or a single
    sample-like object with ``ys`` and ``thetas`` attributes.  On failure
    the smallest violating pair and its excess are reported.
    """
    if thetas is None:
        ys, thetas = ys.ys, ys.thetas
    y = np.asarray(ys, dtype=float)
    th = np.asarray(thetas, dtype=float)
    m = y.shape[0]
    if m < 2:
        return GraphCheck(True)
    d = np.arccos(np.clip(y @ y.T, -1.0, 1.0))
    gap = np.abs(th[:, None] - th[None, :])
    iu, ju = np.triu_indices(m, k=1)
    excess = gap[iu, ju] - d[iu, ju]
    worst = int(np.argmax(excess))
    if excess[worst] > tol:
        bad = excess > tol
        k = int(np.argmax(bad))
        return GraphCheck(False, (int(iu[k]), int(ju[k])), float(excess[k]))
    return GraphCheck(True, None, float(excess[worst]))
