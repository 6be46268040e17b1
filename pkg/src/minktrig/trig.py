"""Laws of cosines, laws of sines, and sum theorems for the four triangle families.

Supported families: hyperbolic (and antipodal hyperbolic), spatiolateral
non-contractible, spatiolateral contractible, and tempolateral, each with its
own sign pattern.  Sides and angles are measured independently with distance()
and angle(); the laws are then evaluated as residuals, never solved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .constants import DEFAULT_TOL, Tolerances
from .errors import DegenerateTriangle, UnsupportedFamily
from .polar import polar_triangle
from .surfaces import Component, angle, distance, surface_point, tangent_vector
from .triangles import (
    ProperKind,
    Triangle,
    TriangleFamily,
    classify_triangle,
    is_degenerate,
)

VERTEX_LABELS = ("A", "B", "C")


class LawFamily(Enum):
    HYP = "hyperbolic"
    SPATIO_NC = "spatiolateral_noncontractible"
    SPATIO_C = "spatiolateral_contractible"
    TEMPO = "tempolateral"


@dataclass(frozen=True)
class TriangleMeasurements:
    family: LawFamily
    sides: tuple  # (a, b, c) after any relabeling
    angles: tuple  # (alpha, beta, gamma)
    apex: Optional[str] = None  # tempolateral only, always "A" after relabeling
    polar_anchor: Optional[str] = None  # contractible spatiolateral only


@dataclass(frozen=True)
class TrigReport:
    family: LawFamily
    lcs_residuals: tuple
    lca_residuals: tuple
    sines_ratios: tuple
    angle_sum: Optional[float] = None
    side_sum: Optional[float] = None

    def max_residual(self) -> float:
        r = self.sines_ratios
        sines = [abs(r[0] - r[1]), abs(r[1] - r[2]), abs(r[0] - r[2])]
        return max(list(self.lcs_residuals) + list(self.lca_residuals) + sines)


def _law_family(t: Triangle, tol: Tolerances) -> LawFamily:
    cls, _ = classify_triangle(t, tol)
    if cls.degenerate:
        raise DegenerateTriangle("trig laws are stated for non-degenerate triangles")
    if cls.family in (TriangleFamily.HYPERBOLIC, TriangleFamily.ANTIPODAL_HYPERBOLIC):
        return LawFamily.HYP
    if cls.proper_kind is ProperKind.SPATIOLATERAL_NONCONTRACTIBLE:
        return LawFamily.SPATIO_NC
    if cls.proper_kind is ProperKind.SPATIOLATERAL_CONTRACTIBLE:
        return LawFamily.SPATIO_C
    if cls.proper_kind is ProperKind.TEMPOLATERAL:
        return LawFamily.TEMPO
    raise UnsupportedFamily(f"no trig laws for {cls.family}/{cls.proper_kind}")


def _tempo_apex_index(t: Triangle, tol: Tolerances) -> int:
    """Index of the unique vertex whose tangent vectors toward the other two
    have first components of opposite sign."""
    verts = t.vertices()
    apexes = []
    for i, v in enumerate(verts):
        others = [verts[j] for j in range(3) if j != i]
        signs = []
        for o in others:
            x1 = tangent_vector(v, o, tol).x1
            if abs(x1) <= tol.eps_light:
                raise DegenerateTriangle("apex detection ambiguous: tangent time "
                                         "component within tolerance of zero")
            signs.append(x1 > 0.0)
        if signs[0] != signs[1]:
            apexes.append(i)
    if len(apexes) != 1:
        raise DegenerateTriangle(f"expected one apex vertex, found {len(apexes)}")
    return apexes[0]


def _spatio_c_anchor_index(t: Triangle, tol: Tolerances) -> int:
    """Index of the vertex whose polar vertex sits alone on its hyperboloid sheet.

    With that vertex labeled A the polar side a' joins two points of one sheet
    and is therefore not strange.
    """
    result = polar_triangle(t, tol)
    comps = [surface_point(v, tol).component for v in result.vertices]
    for i in range(3):
        others = [comps[j] for j in range(3) if j != i]
        if comps[i] is not others[0] and others[0] is others[1]:
            return i
    raise DegenerateTriangle("polar vertices do not split 1 + 2 across the sheets")


def _relabeled(t: Triangle, first: int) -> Triangle:
    verts = t.vertices()
    rest = [verts[j] for j in range(3) if j != first]
    return Triangle(verts[first], rest[0], rest[1])


def measure(t: Triangle, tol: Tolerances = DEFAULT_TOL) -> TriangleMeasurements:
    """Side lengths and angles, with the family's canonical vertex labeling.

    For tempolateral triangles the apex is moved to A; for contractible
    spatiolateral triangles A is chosen so the polar side a' is not strange.
    """
    family = _law_family(t, tol)
    apex = None
    anchor = None
    if family is LawFamily.TEMPO:
        t = _relabeled(t, _tempo_apex_index(t, tol))
        apex = "A"
    elif family is LawFamily.SPATIO_C:
        t = _relabeled(t, _spatio_c_anchor_index(t, tol))
        anchor = "a"

    A, B, C = t.vertices()
    sides = (distance(B, C, tol), distance(A, C, tol), distance(A, B, tol))
    angles = (angle(B, A, C, tol), angle(A, B, C, tol), angle(A, C, B, tol))
    return TriangleMeasurements(
        family=family, sides=sides, angles=angles, apex=apex, polar_anchor=anchor
    )


def lcs_residuals(m: TriangleMeasurements) -> tuple:
    """Residuals of the three law-of-cosines-for-sides equations."""
    a, b, c = m.sides
    al, be, ga = m.angles
    if m.family is LawFamily.HYP:
        return (
            abs(math.cosh(a) - (math.cosh(b) * math.cosh(c)
                                - math.cos(al) * math.sinh(b) * math.sinh(c))),
            abs(math.cosh(b) - (math.cosh(a) * math.cosh(c)
                                - math.cos(be) * math.sinh(a) * math.sinh(c))),
            abs(math.cosh(c) - (math.cosh(a) * math.cosh(b)
                                - math.cos(ga) * math.sinh(a) * math.sinh(b))),
        )
    if m.family is LawFamily.SPATIO_NC:
        return (
            abs(math.cos(a) - (math.cos(b) * math.cos(c)
                               - math.cosh(al) * math.sin(b) * math.sin(c))),
            abs(math.cos(b) - (math.cos(a) * math.cos(c)
                               - math.cosh(be) * math.sin(a) * math.sin(c))),
            abs(math.cos(c) - (math.cos(a) * math.cos(b)
                               - math.cosh(ga) * math.sin(a) * math.sin(b))),
        )
    if m.family is LawFamily.SPATIO_C:
        # minus sign at the anchored side a, plus signs at b and c
        return (
            abs(math.cos(a) - (math.cos(b) * math.cos(c)
                               - math.cosh(al) * math.sin(b) * math.sin(c))),
            abs(math.cos(b) - (math.cos(a) * math.cos(c)
                               + math.cosh(be) * math.sin(a) * math.sin(c))),
            abs(math.cos(c) - (math.cos(a) * math.cos(b)
                               + math.cosh(ga) * math.sin(a) * math.sin(b))),
        )
    # tempolateral: plus sign at the apex's opposite side a only
    return (
        abs(math.cosh(a) - (math.cosh(b) * math.cosh(c)
                            + math.cosh(al) * math.sinh(b) * math.sinh(c))),
        abs(math.cosh(b) - (math.cosh(a) * math.cosh(c)
                            - math.cosh(be) * math.sinh(a) * math.sinh(c))),
        abs(math.cosh(c) - (math.cosh(a) * math.cosh(b)
                            - math.cosh(ga) * math.sinh(a) * math.sinh(b))),
    )


def lca_residuals(m: TriangleMeasurements) -> tuple:
    """Residuals of the three law-of-cosines-for-angles equations."""
    a, b, c = m.sides
    al, be, ga = m.angles
    if m.family is LawFamily.HYP:
        return (
            abs(math.cos(al) - (-math.cos(be) * math.cos(ga)
                                + math.cosh(a) * math.sin(be) * math.sin(ga))),
            abs(math.cos(be) - (-math.cos(al) * math.cos(ga)
                                + math.cosh(b) * math.sin(al) * math.sin(ga))),
            abs(math.cos(ga) - (-math.cos(al) * math.cos(be)
                                + math.cosh(c) * math.sin(al) * math.sin(be))),
        )
    if m.family is LawFamily.SPATIO_NC:
        return (
            abs(math.cosh(al) - (math.cosh(be) * math.cosh(ga)
                                 + math.cos(a) * math.sinh(be) * math.sinh(ga))),
            abs(math.cosh(be) - (math.cosh(al) * math.cosh(ga)
                                 + math.cos(b) * math.sinh(al) * math.sinh(ga))),
            abs(math.cosh(ga) - (math.cosh(al) * math.cosh(be)
                                 + math.cos(c) * math.sinh(al) * math.sinh(be))),
        )
    if m.family is LawFamily.SPATIO_C:
        return (
            abs(math.cosh(al) - (math.cosh(be) * math.cosh(ga)
                                 + math.cos(a) * math.sinh(be) * math.sinh(ga))),
            abs(math.cosh(be) - (math.cosh(al) * math.cosh(ga)
                                 - math.cos(b) * math.sinh(al) * math.sinh(ga))),
            abs(math.cosh(ga) - (math.cosh(al) * math.cosh(be)
                                 - math.cos(c) * math.sinh(al) * math.sinh(be))),
        )
    return (
        abs(math.cosh(al) - (math.cosh(be) * math.cosh(ga)
                             + math.cosh(a) * math.sinh(be) * math.sinh(ga))),
        abs(math.cosh(be) - (math.cosh(al) * math.cosh(ga)
                             - math.cosh(b) * math.sinh(al) * math.sinh(ga))),
        abs(math.cosh(ga) - (math.cosh(al) * math.cosh(be)
                             - math.cosh(c) * math.sinh(al) * math.sinh(be))),
    )


def sines_ratios(m: TriangleMeasurements) -> tuple:
    """The three law-of-sines ratios; their pairwise differences are the residuals.

    Angles here are unsigned, so the ratios are the common positive value
    |det(A,B,C)| / (|||AxB||| |||BxC||| |||CxA|||) in every family.  In a
    signed-angle formalism the anchored/apex ratio of the contractible
    spatiolateral and tempolateral families carries a minus sign; that sign
    cancels against the signed angle and is not observable in magnitudes.
    """
    a, b, c = m.sides
    al, be, ga = m.angles
    if m.family is LawFamily.HYP:
        dens = (math.sinh(a), math.sinh(b), math.sinh(c))
        nums = (math.sin(al), math.sin(be), math.sin(ga))
    elif m.family in (LawFamily.SPATIO_NC, LawFamily.SPATIO_C):
        dens = (math.sin(a), math.sin(b), math.sin(c))
        nums = (math.sinh(al), math.sinh(be), math.sinh(ga))
    else:
        dens = (math.sinh(a), math.sinh(b), math.sinh(c))
        nums = (math.sinh(al), math.sinh(be), math.sinh(ga))
    if any(abs(d) < 1e-300 for d in dens):
        raise DegenerateTriangle("law of sines has a vanishing denominator")
    return tuple(n / d for n, d in zip(nums, dens))


def angle_sum_check(m: TriangleMeasurements) -> float:
    """Angle sum; the hyperbolic theorem asserts it is strictly below pi."""
    if m.family is not LawFamily.HYP:
        raise UnsupportedFamily("angle sum theorem applies to hyperbolic triangles")
    return sum(m.angles)


def side_sum_check(m: TriangleMeasurements) -> float:
    """Side sum; above 2*pi exactly for the non-contractible spatiolateral case."""
    if m.family not in (LawFamily.SPATIO_NC, LawFamily.SPATIO_C):
        raise UnsupportedFamily("side sum theorem applies to spatiolateral triangles")
    return sum(m.sides)


def trig_report(t: Triangle, tol: Tolerances = DEFAULT_TOL) -> TrigReport:
    m = measure(t, tol)
    return TrigReport(
        family=m.family,
        lcs_residuals=lcs_residuals(m),
        lca_residuals=lca_residuals(m),
        sines_ratios=sines_ratios(m),
        angle_sum=angle_sum_check(m) if m.family is LawFamily.HYP else None,
        side_sum=(
            side_sum_check(m)
            if m.family in (LawFamily.SPATIO_NC, LawFamily.SPATIO_C)
            else None
        ),
    )
