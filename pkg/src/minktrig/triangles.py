"""Triangle taxonomy, degeneracy, contractibility, and triangle-inequality reports.

A triangle is any three pairwise-distinct points of the unit quadric.  Side
``a`` joins B and C, side ``b`` joins A and C, side ``c`` joins A and B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .constants import DEFAULT_TOL, Tolerances
from .errors import (
    DegenerateSpan,
    DegenerateTriangle,
    DuplicateVertices,
    NotSpatiolateral,
)
from .mink import MVec3, PlaneClass, classify_plane, det3
from .surfaces import (
    Component,
    SegmentKind,
    SurfacePoint,
    distance,
    points_antipodal,
    points_equal,
    segment_kind,
    surface_point,
    tangent_vector,
)

SIDE_LABELS = ("a", "b", "c")


class TriangleFamily(Enum):
    HYPERBOLIC = "hyperbolic"
    ANTIPODAL_HYPERBOLIC = "antipodal_hyperbolic"
    PROPER = "proper"
    STRANGE = "strange"


class ProperKind(Enum):
    SPATIOLATERAL_CONTRACTIBLE = "spatiolateral_contractible"
    SPATIOLATERAL_NONCONTRACTIBLE = "spatiolateral_noncontractible"
    CHOROSCELES = "chorosceles"
    TEMPOLATERAL = "tempolateral"
    CHRONOSCELES = "chronosceles"
    LUCILATERAL = "lucilateral"
    BIMETRICAL_CHOROSCELES = "bimetrical_chorosceles"
    PHOTOSCELES_SPACELIKE_BASE = "photosceles_spacelike_base"
    BIMETRICAL_CHRONOSCELES = "bimetrical_chronosceles"
    PHOTOSCELES_TIMELIKE_BASE = "photosceles_timelike_base"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class Triangle:
    A: SurfacePoint
    B: SurfacePoint
    C: SurfacePoint

    def __post_init__(self):
        pairs = ((self.A, self.B), (self.A, self.C), (self.B, self.C))
        if any(points_equal(p, q) for p, q in pairs):
            raise DuplicateVertices("triangle vertices must be pairwise distinct")

    @classmethod
    def from_vectors(cls, a: MVec3, b: MVec3, c: MVec3,
                     tol: Tolerances = DEFAULT_TOL) -> "Triangle":
        return cls(surface_point(a, tol), surface_point(b, tol), surface_point(c, tol))

    def vertices(self) -> tuple:
        return (self.A, self.B, self.C)

    def side_endpoints(self) -> tuple:
        """Endpoint pairs in side order a, b, c."""
        return ((self.B, self.C), (self.A, self.C), (self.A, self.B))


@dataclass(frozen=True)
class SideReport:
    label: str
    kind: SegmentKind
    length: float


@dataclass(frozen=True)
class TriangleClass:
    family: TriangleFamily
    proper_kind: Optional[ProperKind]
    side_kinds: tuple
    impossible_sides: tuple
    degenerate: bool
    contractible: Optional[bool]
    vertex_components: tuple
    has_opposite_vertices: bool
    has_lightlike_side_plane: bool


def is_degenerate(t: Triangle, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when the vertices are coplanar with the origin."""
    A, B, C = (v.coords for v in t.vertices())
    scale = A.euclid_norm() * B.euclid_norm() * C.euclid_norm()
    return abs(det3(A, B, C)) <= tol.eps_degen * scale


def _spacelike_arc_samples(p: SurfacePoint, q: SurfacePoint, n: int,
                           tol: Tolerances) -> np.ndarray:
    length = distance(p, q, tol)
    x = tangent_vector(p, q, tol)
    ts = np.linspace(0.0, length, n, endpoint=False)
    return (np.outer(np.cos(ts), p.coords.as_array())
            + np.outer(np.sin(ts), x.as_array()))


def _winding_number(t: Triangle, samples_per_side: int, tol: Tolerances) -> int:
    """Winding of the projected boundary loop about the origin of the x2-x3 plane.

    Spacelike arcs project to curves of radius >= 1, so the origin is never
    approached; samples are refined if any angle increment exceeds pi/2.
    """
    n = samples_per_side
    while True:
        arcs = [_spacelike_arc_samples(p, q, n, tol)
                for p, q in ((t.A, t.B), (t.B, t.C), (t.C, t.A))]
        loop = np.vstack(arcs)
        ang = np.arctan2(loop[:, 2], loop[:, 1])
        steps = np.diff(np.append(ang, ang[0]))
        steps = (steps + np.pi) % (2.0 * np.pi) - np.pi
        if np.max(np.abs(steps)) <= np.pi / 2 or n >= 4096:
            return int(round(steps.sum() / (2.0 * np.pi)))
        n *= 2


def is_contractible(t: Triangle, tol: Tolerances = DEFAULT_TOL,
                    samples_per_side: int = 256) -> bool:
    """True when the projected boundary does not wind around the origin."""
    kinds = [segment_kind(p, q, tol) for p, q in t.side_endpoints()]
    if any(k is not SegmentKind.DE_SITTER_SPACELIKE for k in kinds):
        raise NotSpatiolateral("contractibility is defined for spatiolateral triangles")
    if is_degenerate(t, tol):
        raise DegenerateTriangle("contractibility is undefined for degenerate triangles")
    return _winding_number(t, samples_per_side, tol) == 0


_KIND_TABLE = {
    (3, 0, 0): None,  # spatiolateral, split by contractibility below
    (2, 1, 0): ProperKind.CHOROSCELES,
    (0, 3, 0): ProperKind.TEMPOLATERAL,
    (1, 2, 0): ProperKind.CHRONOSCELES,
    (0, 0, 3): ProperKind.LUCILATERAL,
    (2, 0, 1): ProperKind.BIMETRICAL_CHOROSCELES,
    (1, 0, 2): ProperKind.PHOTOSCELES_SPACELIKE_BASE,
    (0, 2, 1): ProperKind.BIMETRICAL_CHRONOSCELES,
    (0, 1, 2): ProperKind.PHOTOSCELES_TIMELIKE_BASE,
    (1, 1, 1): ProperKind.MULTIPLE,
}


def classify_triangle(t: Triangle, tol: Tolerances = DEFAULT_TOL):
    """Classify a triangle; returns (TriangleClass, [SideReport])."""
    comps = tuple(v.component for v in t.vertices())
    if all(c is Component.H2 for c in comps):
        family = TriangleFamily.HYPERBOLIC
    elif all(c is Component.NEG_H2 for c in comps):
        family = TriangleFamily.ANTIPODAL_HYPERBOLIC
    elif all(c is Component.DE_SITTER for c in comps):
        family = TriangleFamily.PROPER
    else:
        family = TriangleFamily.STRANGE

    sides = []
    lightlike_plane = False
    opposite = False
    for label, (p, q) in zip(SIDE_LABELS, t.side_endpoints()):
        kind = segment_kind(p, q, tol)
        length = distance(p, q, tol)
        sides.append(SideReport(label, kind, length))
        if points_antipodal(p, q):
            opposite = True
        else:
            try:
                lightlike_plane |= (
                    classify_plane(p.coords, q.coords, tol) is PlaneClass.LIGHTLIKE
                )
            except DegenerateSpan:
                pass

    impossible = tuple(s.label for s in sides if s.kind is SegmentKind.EMPTY)
    degenerate = is_degenerate(t, tol)

    proper_kind = None
    contractible = None
    if family is TriangleFamily.PROPER and not impossible:
        counts = (
            sum(s.kind is SegmentKind.DE_SITTER_SPACELIKE for s in sides),
            sum(s.kind is SegmentKind.DE_SITTER_TIMELIKE for s in sides),
            sum(s.kind is SegmentKind.DE_SITTER_LIGHTLIKE for s in sides),
        )
        proper_kind = _KIND_TABLE[counts]
        if counts == (3, 0, 0):
            if degenerate:
                # winding is ill-defined here; fall back to the side-sum criterion
                contractible = sum(s.length for s in sides) < 2.0 * math.pi
            else:
                contractible = is_contractible(t, tol)
            proper_kind = (
                ProperKind.SPATIOLATERAL_CONTRACTIBLE
                if contractible
                else ProperKind.SPATIOLATERAL_NONCONTRACTIBLE
            )

    cls = TriangleClass(
        family=family,
        proper_kind=proper_kind,
        side_kinds=tuple(s.kind for s in sides),
        impossible_sides=impossible,
        degenerate=degenerate,
        contractible=contractible,
        vertex_components=comps,
        has_opposite_vertices=opposite,
        has_lightlike_side_plane=lightlike_plane,
    )
    return cls, sides


@dataclass(frozen=True)
class InequalityReport:
    holds: bool
    lengths: tuple  # lengths in side order a, b, c
    predicted: Optional[bool]


_ISOSCELES_TOL = 1e-9


def _predicted_inequality(cls: TriangleClass, sides) -> Optional[bool]:
    lengths = [s.length for s in sides]
    infinite = sum(math.isinf(x) for x in lengths)
    if cls.degenerate:
        return True
    if cls.family in (TriangleFamily.HYPERBOLIC, TriangleFamily.ANTIPODAL_HYPERBOLIC):
        return True
    if cls.family is TriangleFamily.STRANGE:
        return True if infinite >= 2 else None
    if cls.impossible_sides:
        return infinite >= 2
    pk = cls.proper_kind
    if pk is ProperKind.TEMPOLATERAL:
        return False
    if pk is ProperKind.SPATIOLATERAL_NONCONTRACTIBLE:
        return True
    if pk is ProperKind.SPATIOLATERAL_CONTRACTIBLE:
        return False
    if pk is ProperKind.LUCILATERAL:
        return True
    if pk in (ProperKind.PHOTOSCELES_SPACELIKE_BASE,
              ProperKind.PHOTOSCELES_TIMELIKE_BASE):
        return False
    if pk in (ProperKind.BIMETRICAL_CHOROSCELES,
              ProperKind.BIMETRICAL_CHRONOSCELES):
        measurable = sorted(x for x in lengths if x > 0.0)
        if len(measurable) != 2:
            return None
        return abs(measurable[0] - measurable[1]) <= _ISOSCELES_TOL
    # chorosceles, chronosceles, multiple: the inequality holds only case by case
    return None


def triangle_inequality_report(
    t: Triangle, tol: Tolerances = DEFAULT_TOL
) -> InequalityReport:
    cls, sides = classify_triangle(t, tol)
    la, lb, lc = (s.length for s in sides)
    holds = (lb + lc >= la) and (la + lc >= lb) and (la + lb >= lc)
    return InequalityReport(
        holds=holds,
        lengths=(la, lb, lc),
        predicted=_predicted_inequality(cls, sides),
    )
