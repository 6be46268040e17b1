"""Linear algebra of the indefinite product -x1*y1 + x2*y2 + x3*y3 on R^3.

Sign convention: the first coordinate is the time coordinate.  All vectors
are plain triples of finite floats; 3x3 matrices are numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import DEFAULT_TOL, Tolerances
from .errors import DegenerateSpan, LightlikeNormalization

J_MATRIX = np.diag([-1.0, 1.0, 1.0])


@dataclass(frozen=True)
class MVec3:
    """A vector of R^3 under the indefinite product.  x1 is the time coordinate."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for v in (self.x1, self.x2, self.x3):
            if not math.isfinite(v):
                raise ValueError(f"non-finite component in {(self.x1, self.x2, self.x3)}")

    def __add__(self, other: "MVec3") -> "MVec3":
        return MVec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "MVec3") -> "MVec3":
        return MVec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "MVec3":
        return MVec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, s: float) -> "MVec3":
        return MVec3(self.x1 * s, self.x2 * s, self.x3 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "MVec3":
        return MVec3(self.x1 / s, self.x2 / s, self.x3 / s)

    def as_tuple(self) -> tuple:
        return (self.x1, self.x2, self.x3)

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    @staticmethod
    def from_array(a) -> "MVec3":
        return MVec3(float(a[0]), float(a[1]), float(a[2]))

    def euclid_norm(self) -> float:
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)

    def is_zero(self) -> bool:
        return self.x1 == 0.0 and self.x2 == 0.0 and self.x3 == 0.0


E1 = MVec3(1.0, 0.0, 0.0)
E2 = MVec3(0.0, 1.0, 0.0)
E3 = MVec3(0.0, 0.0, 1.0)


class CausalClass(Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


class PlaneClass(Enum):
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"
    TIMELIKE = "timelike"


def minkowski_product(x: MVec3, y: MVec3) -> float:
    return -x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3


def minkowski_norm(x: MVec3) -> float:
    return math.sqrt(abs(minkowski_product(x, x)))


def euclid_dot(x: MVec3, y: MVec3) -> float:
    return x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3


def classify_vector(x: MVec3, tol: Tolerances = DEFAULT_TOL) -> CausalClass:
    """Causal class of x.  The zero vector counts as spacelike by convention."""
    if x.is_zero():
        return CausalClass.SPACELIKE
    q = minkowski_product(x, x)
    scale = max(1.0, x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3)
    if abs(q) <= tol.eps_light * scale:
        return CausalClass.LIGHTLIKE
    return CausalClass.TIMELIKE if q < 0.0 else CausalClass.SPACELIKE


def classification_margin(x: MVec3, tol: Tolerances = DEFAULT_TOL) -> float:
    """|<<x,x>>| in units of the lightlike band; values below 10 are suspect."""
    if x.is_zero():
        return math.inf
    q = minkowski_product(x, x)
    scale = max(1.0, x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3)
    return abs(q) / (tol.eps_light * scale)


def normalize(x: MVec3, tol: Tolerances = DEFAULT_TOL) -> MVec3:
    if classify_vector(x, tol) is CausalClass.LIGHTLIKE or x.is_zero():
        raise LightlikeNormalization(f"cannot normalize {x.as_tuple()}")
    return x / minkowski_norm(x)


def cross(x: MVec3, y: MVec3) -> MVec3:
    """Euclidean cross product.  J(x cross y) is Minkowski-orthogonal to x and y."""
    return MVec3(
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x3 * y.x1 - x.x1 * y.x3,
        x.x1 * y.x2 - x.x2 * y.x1,
    )


def j_transform(x: MVec3) -> MVec3:
    """Negate the time component.  An involution and a Lorentz transformation."""
    return MVec3(-x.x1, x.x2, x.x3)


def det3(a: MVec3, b: MVec3, c: MVec3) -> float:
    """Determinant of the matrix with columns a, b, c; equals <a x b, c> (Euclidean)."""
    return euclid_dot(cross(a, b), c)


def is_lorentz(m: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        return False
    return bool(np.max(np.abs(m.T @ J_MATRIX @ m - J_MATRIX)) <= tol.eps_mat)


def apply_matrix(m: np.ndarray, x: MVec3) -> MVec3:
    return MVec3.from_array(np.asarray(m) @ x.as_array())


def _rotation_e1(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def boost_e1_e2(rapidity: float) -> np.ndarray:
    """Pure boost in the e1-e2 plane; maps e1 to (cosh t, sinh t, 0)."""
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    return np.array([[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]])


def random_lorentz(
    rng: np.random.Generator,
    orthochronous: bool = True,
    max_rapidity: float = 3.0,
) -> np.ndarray:
    """Rotation-boost-rotation Lorentz matrix with bounded rapidity.

    With ``orthochronous`` the (1,1) entry is >= 1, so the forward hyperboloid
    sheet is preserved.
    """
    r1 = _rotation_e1(rng.uniform(0.0, 2.0 * math.pi))
    r2 = _rotation_e1(rng.uniform(0.0, 2.0 * math.pi))
    b = boost_e1_e2(rng.uniform(0.0, max_rapidity))
    m = r1 @ b @ r2
    if not orthochronous and rng.random() < 0.5:
        m = J_MATRIX @ m
    return m


def lorentz_orthogonal_basis(
    u: MVec3, v: MVec3, tol: Tolerances = DEFAULT_TOL
) -> tuple:
    """Minkowski-orthogonal basis (b1, b2) of span(u, v) with b1 spacelike.

    Tie-breaking is deterministic: b1 is the input with the larger self-product;
    if neither input is spacelike, one of u+v, u-v is taken instead.
    """
    n = cross(u, v)
    scale = max(u.euclid_norm() * v.euclid_norm(), 1e-300)
    if n.euclid_norm() <= 1e-12 * scale:
        raise DegenerateSpan("spanning vectors are linearly dependent")

    qu = minkowski_product(u, u)
    qv = minkowski_product(v, v)
    candidates = [u, v] if qu >= qv else [v, u]
    candidates += [u + v, u - v]
    puv = minkowski_product(u, v)
    if qv < 0.0:
        # maximizer of <<u + t v, u + t v>> over t; positive for any plane
        # that contains spacelike vectors at all
        candidates.append(u - (puv / qv) * v)
    elif qv == 0.0 and puv != 0.0:
        t_lin = (1.0 + abs(qu)) / (2.0 * abs(puv))
        candidates.append(u + math.copysign(t_lin, puv) * v)
    b1 = next(
        c for c in candidates if classify_vector(c, tol) is CausalClass.SPACELIKE
        and not c.is_zero()
    )
    # project away the b1 component from whichever input is independent of b1
    other = u if cross(u, b1).euclid_norm() > cross(v, b1).euclid_norm() else v
    b2 = other - (minkowski_product(other, b1) / minkowski_product(b1, b1)) * b1
    return b1, b2


def classify_plane(u: MVec3, v: MVec3, tol: Tolerances = DEFAULT_TOL) -> PlaneClass:
    """Classify span(u, v) via its Minkowski normal J(u cross v).

    The plane is spacelike iff the normal is timelike, timelike iff the normal
    is spacelike, lightlike iff the normal is lightlike.
    """
    n = cross(u, v)
    scale = max(u.euclid_norm() * v.euclid_norm(), 1e-300)
    if n.euclid_norm() <= 1e-12 * scale:
        raise DegenerateSpan("spanning vectors are linearly dependent")
    kind = classify_vector(j_transform(n), tol)
    if kind is CausalClass.TIMELIKE:
        return PlaneClass.SPACELIKE
    if kind is CausalClass.SPACELIKE:
        return PlaneClass.TIMELIKE
    return PlaneClass.LIGHTLIKE
