"""The ambient quadratic space R^{2,n}.

Vectors are real arrays of length n+2, ordered ``(u, v, x_1, ..., x_n)``,
carrying the signature-(2,n) quadratic form

    q(u, v, x) = -u**2 - v**2 + x_1**2 + ... + x_n**2

with Gram matrix ``J = diag(-1, -1, 1, ..., 1)``.  The auxiliary Euclidean
norm is the plain 2-norm of the coordinate array.

A *ray* is an equivalence class of nonzero vectors under positive rescaling;
a ray and its opposite are distinct points (the ray space is the double cover
of projective space).  Null rays are the points of the Einstein universe.

Isometries are certified against ``M^T J M = J`` together with the two
determinant signs that cut out the identity component of O(2,n): det(M) = 1
and a positive determinant of the 2x2 (u,v) block.
"""

from dataclasses import dataclass, field

import numpy as np

from .config import ALGEBRAIC_TOL


class GeometryError(ValueError):
    """Inputs violate a geometric precondition."""


class NotAnIsometry(GeometryError):
    """Matrix does not preserve the quadratic form."""


class NotIdentityComponent(GeometryError):
    """Form-preserving matrix lies outside the identity component."""


TIMELIKE = "timelike"
SPACELIKE = "spacelike"
LIGHTLIKE = "lightlike"
ZERO = "zero"


def as_vector(x):
    """Coerce to a float array of length n+2 (n >= 1) with finite entries."""
    a = np.asarray(x, dtype=float)
    if a.ndim != 1 or a.shape[0] < 3:
        raise GeometryError("expected a vector of length n+2 with n >= 1")
    if not np.all(np.isfinite(a)):
        raise GeometryError("vector entries must be finite")
    return a


def form_matrix(n):
    """Gram matrix J = diag(-1, -1, 1, ..., 1) of size n+2."""
    j = np.eye(n + 2)
    j[0, 0] = j[1, 1] = -1.0
    return j


def q_eval(x):
    """Evaluate the quadratic form: -u^2 - v^2 + sum x_i^2."""
    a = as_vector(x)
    return float(-a[0] * a[0] - a[1] * a[1] + a[2:] @ a[2:])


def inner(x, y):
    """Scalar product polarizing the form; inner(x, x) == q_eval(x)."""
    a, b = as_vector(x), as_vector(y)
    if a.shape != b.shape:
        raise GeometryError("dimension mismatch")
    return float(-a[0] * b[0] - a[1] * b[1] + a[2:] @ b[2:])


def classify(x, tol=ALGEBRAIC_TOL):
    """Causal type of a vector: timelike, spacelike, lightlike or zero.

    The zero verdict is decided by the Euclidean norm, not by q, so that
    genuinely null vectors are never mistaken for the origin.
    """
    a = as_vector(x)
    q = q_eval(a)
    if q < -tol:
        return TIMELIKE
    if q > tol:
        return SPACELIKE
    if np.linalg.norm(a) > tol:
        return LIGHTLIKE
    return ZERO


@dataclass(frozen=True, eq=False)
class RayPoint:
    """A positive-homothety class, stored as its unit-Euclidean-norm
    representative.  ray(x) == ray(lam*x) for lam > 0, but ray(-x) != ray(x)."""

    rep: np.ndarray

    @property
    def n(self):
        return self.rep.shape[0] - 2

    def close_to(self, other, tol=ALGEBRAIC_TOL):
        return chordal_distance(self, other) <= tol

    def __repr__(self):
        return f"RayPoint({np.array2string(self.rep, precision=6)})"


def ray(x):
    """Project a nonzero vector to its ray (unit Euclidean representative)."""
    a = as_vector(x)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        raise GeometryError("zero vector has no ray")
    rep = a / norm
    rep.flags.writeable = False
    return RayPoint(rep)


def chordal_distance(r1, r2):
    """Euclidean distance between unit representatives (metric on rays)."""
    return float(np.linalg.norm(r1.rep - r2.rep))


@dataclass(frozen=True)
class Isometry:
    """A matrix certified to lie in the identity component of O(2,n)."""

    matrix: np.ndarray
    certified: bool = field(default=True)

    @property
    def n(self):
        return self.matrix.shape[0] - 2

    def apply(self, x):
        return self.matrix @ as_vector(x)

    def apply_ray(self, r):
        return ray(self.matrix @ r.rep)

    def inverse(self):
        # For J-orthogonal M the inverse is J M^T J, cheaper and more
        # accurate than a generic solve.
        j = form_matrix(self.n)
        return Isometry(j @ self.matrix.T @ j, self.certified)

    def __matmul__(self, other):
        if isinstance(other, Isometry):
            return Isometry(self.matrix @ other.matrix,
                            self.certified and other.certified)
        return self.matrix @ other


def gram_residual(m):
    """max |M^T J M - J|, the defect of form preservation."""
    m = np.asarray(m, dtype=float)
    j = form_matrix(m.shape[0] - 2)
    return float(np.abs(m.T @ j @ m - j).max())


def certify_isometry(m, tol=ALGEBRAIC_TOL):
    """Certify a matrix as an element of the identity component of O(2,n).

    Checks, in order: the Gram residual max|M^T J M - J| <= tol, then
    |det M - 1| <= tol, then det of the 2x2 (u,v) diagonal block > 0.  The
    two determinant signs classify the four components of O(2,n); a path
    back to the identity is never searched for.

    Raises
    ------
    NotAnIsometry
        if the form is not preserved (or det is not +-1).
    NotIdentityComponent
        if the form is preserved but orientation or time orientation is not.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 3:
        raise NotAnIsometry("expected a square matrix of size n+2")
    res = gram_residual(m)
    if res > tol:
        raise NotAnIsometry(f"Gram residual {res:.3e} exceeds {tol:.1e}")
    det = float(np.linalg.det(m))
    if abs(det - 1.0) > tol:
        if abs(det + 1.0) <= tol:
            raise NotIdentityComponent("det = -1: orientation reversed")
        raise NotAnIsometry(f"determinant {det!r} is not +-1")
    time_block = float(np.linalg.det(m[:2, :2]))
    if time_block <= 0.0:
        raise NotIdentityComponent("time orientation reversed "
                                   f"(u,v block det = {time_block!r})")
    mat = m.copy()
    mat.flags.writeable = False
    return Isometry(mat)
