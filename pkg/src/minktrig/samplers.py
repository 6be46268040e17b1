"""Seeded random generation of points, segments, and triangles by family.

Families with measure-zero lightlike structure (lucilateral, photosceles,
bimetrical, multiple) are built constructively from lightlike rays at e2 and
then moved by a random Lorentz map; rejection sampling alone cannot reach
them.  Every emitted triangle is validated against the classifier before it
is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from .constants import DEFAULT_TOL, Tolerances
from .errors import (
    EmptySegment,
    LightlikeSegment,
    RejectionBudgetExhausted,
    UnsupportedFamily,
)
from .mink import (
    CausalClass,
    E2,
    MVec3,
    apply_matrix,
    classify_vector,
    det3,
    random_lorentz,
)
from .surfaces import (
    Component,
    SegmentKind,
    SurfacePoint,
    distance,
    segment_kind,
    surface_point,
    tangent_vector,
)
from .triangles import (
    ProperKind,
    Triangle,
    TriangleFamily,
    classify_triangle,
)

# sampleable family names, used by SampleSpec and the CLI
FAMILIES = (
    "hyperbolic",
    "antipodal_hyperbolic",
    "spatiolateral_contractible",
    "spatiolateral_noncontractible",
    "tempolateral",
    "chorosceles",
    "chronosceles",
    "lucilateral",
    "bimetrical_chorosceles",
    "bimetrical_chronosceles",
    "photosceles_spacelike_base",
    "photosceles_timelike_base",
    "multiple",
    "strange",
    "impossible",
    "mixed",
)


@dataclass(frozen=True)
class SampleSpec:
    family: str
    count: int
    seed: int
    max_rapidity: float = 3.0
    rejection_budget: int = 1_000_000

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        if self.count < 1:
            raise ValueError("count must be at least 1")


def sample_point(
    component: Component,
    rng: np.random.Generator,
    max_rapidity: float = 3.0,
    tol: Tolerances = DEFAULT_TOL,
) -> SurfacePoint:
    """Point on the requested component, uniform in (rapidity, angle) parameters."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    if component is Component.DE_SITTER:
        v = rng.uniform(-max_rapidity, max_rapidity)
        x = MVec3(math.sinh(v), math.cosh(v) * math.cos(theta),
                  math.cosh(v) * math.sin(theta))
    else:
        u = rng.uniform(0.0, max_rapidity)
        x = MVec3(math.cosh(u), math.sinh(u) * math.cos(theta),
                  math.sinh(u) * math.sin(theta))
        if component is Component.NEG_H2:
            x = -x
    return surface_point(x, tol)


def _well_conditioned(t: Triangle, tol: Tolerances) -> bool:
    """Reject triangles too close to degeneracy for 1e-9 residual targets."""
    A, B, C = (v.coords for v in t.vertices())
    scale = A.euclid_norm() * B.euclid_norm() * C.euclid_norm()
    if abs(det3(A, B, C)) < 1e-3 * scale:
        return False
    for p, q in t.side_endpoints():
        d = distance(p, q, tol)
        if math.isfinite(d) and d < 0.05:
            return False
        kind = segment_kind(p, q, tol)
        if kind is SegmentKind.DE_SITTER_SPACELIKE and d > math.pi - 0.05:
            return False
    return True


def _de_sitter_near_throat(rng, theta: float, v_lo: float, v_hi: float,
                           tol: Tolerances) -> SurfacePoint:
    v = rng.uniform(v_lo, v_hi) * (1.0 if rng.random() < 0.5 else -1.0)
    return surface_point(
        MVec3(math.sinh(v), math.cosh(v) * math.cos(theta),
              math.cosh(v) * math.sin(theta)),
        tol,
    )


def _lightlike_ray_point(t: float, plus: bool) -> MVec3:
    """e2 + t(e1 +- e3); stays on the Lorentzian component for every t."""
    return MVec3(t, 1.0, t if plus else -t)


class _Budget:
    def __init__(self, spec: SampleSpec):
        self.spec = spec
        self.attempts = 0
        self.accepted = 0

    def spend(self):
        self.attempts += 1
        if self.attempts > self.spec.rejection_budget:
            raise RejectionBudgetExhausted(
                self.spec.family, self.attempts - 1, self.accepted
            )


def _hyperbolic_candidate(rng, spec, tol):
    comp = (Component.NEG_H2 if spec.family == "antipodal_hyperbolic"
            else Component.H2)
    cap = min(spec.max_rapidity, 1.5)
    return Triangle(*(sample_point(comp, rng, cap, tol) for _ in range(3)))


def _spatiolateral_candidate(rng, spec, tol):
    contractible = spec.family == "spatiolateral_contractible"
    base = rng.uniform(0.0, 2.0 * math.pi)
    if contractible:
        thetas = base + np.sort(rng.uniform(0.1, 1.0, size=3) * np.array([1, 2, 3]))
    else:
        jitter = rng.uniform(-0.4, 0.4, size=3)
        thetas = base + np.array([0.0, 2.0, 4.0]) * math.pi / 3.0 + jitter
    pts = [_de_sitter_near_throat(rng, float(th), 0.05, 0.35, tol) for th in thetas]
    return Triangle(*pts)


def _tempolateral_candidate(rng, spec, tol):
    s1 = rng.uniform(0.1, 1.0)
    s2 = rng.uniform(0.1, 1.0)
    t1 = rng.uniform(0.2, 1.2)
    t2 = rng.uniform(0.2, 1.2)
    x1 = MVec3(math.cosh(s1), 0.0, math.sinh(s1))
    x2 = MVec3(-math.cosh(s2), 0.0, math.sinh(s2))
    a = E2
    b = math.cosh(t1) * a + math.sinh(t1) * x1
    c = math.cosh(t2) * a + math.sinh(t2) * x2
    m = random_lorentz(rng, orthochronous=True,
                       max_rapidity=min(spec.max_rapidity, 1.0))
    return Triangle.from_vectors(
        apply_matrix(m, a), apply_matrix(m, b), apply_matrix(m, c), tol
    )


def _sceles_candidate(rng, spec, tol):
    thetas = rng.uniform(0.0, 2.0 * math.pi, size=3)
    pts = [_de_sitter_near_throat(rng, float(th), 0.1, 1.2, tol) for th in thetas]
    return Triangle(*pts)


def _photosceles_candidate(rng, spec, tol):
    t1 = rng.uniform(0.3, 1.5)
    if spec.family == "photosceles_timelike_base":
        t2 = -rng.uniform(0.3, 1.5)
    elif spec.family == "photosceles_spacelike_base":
        t2 = rng.uniform(0.1, 0.9) / t1
    elif spec.family == "lucilateral":
        # all three sides lightlike forces collinear points on one ruling
        t2 = -rng.uniform(0.3, 1.5)
    else:
        raise UnsupportedFamily(spec.family)
    a = E2
    b = _lightlike_ray_point(t1, plus=True)
    c = _lightlike_ray_point(t2, plus=(spec.family == "lucilateral"))
    m = random_lorentz(rng, orthochronous=True,
                       max_rapidity=min(spec.max_rapidity, 1.0))
    return Triangle.from_vectors(
        apply_matrix(m, a), apply_matrix(m, b), apply_matrix(m, c), tol
    )


def _one_lightlike_candidate(rng, spec, tol):
    # one lightlike side (A, B); the third vertex decides the remaining kinds
    t1 = rng.uniform(0.3, 1.5) * (1.0 if rng.random() < 0.5 else -1.0)
    a = E2
    b = _lightlike_ray_point(t1, plus=True)
    c = _de_sitter_near_throat(rng, rng.uniform(0.0, 2.0 * math.pi), 0.05, 1.2, tol)
    m = random_lorentz(rng, orthochronous=True,
                       max_rapidity=min(spec.max_rapidity, 1.0))
    return Triangle.from_vectors(
        apply_matrix(m, a), apply_matrix(m, b), apply_matrix(m, c.coords), tol
    )


def _strange_candidate(rng, spec, tol):
    comps = [Component.H2, Component.NEG_H2, Component.DE_SITTER]
    picks = [comps[i] for i in rng.integers(0, 3, size=3)]
    if len(set(picks)) == 1:
        picks[rng.integers(0, 3)] = comps[(comps.index(picks[0]) + 1) % 3]
    cap = min(spec.max_rapidity, 1.5)
    return Triangle(*(sample_point(p, rng, cap, tol) for p in picks))


def _impossible_candidate(rng, spec, tol):
    # widely separated de Sitter points make empty sides likely
    pts = [sample_point(Component.DE_SITTER, rng, min(spec.max_rapidity, 2.0), tol)
           for _ in range(3)]
    return Triangle(*pts)


def _accepts(spec: SampleSpec, t: Triangle, tol: Tolerances) -> bool:
    cls, _ = classify_triangle(t, tol)
    fam = spec.family
    if fam == "strange":
        return cls.family is TriangleFamily.STRANGE
    if fam == "impossible":
        return bool(cls.impossible_sides)
    if fam == "hyperbolic":
        ok = cls.family is TriangleFamily.HYPERBOLIC
    elif fam == "antipodal_hyperbolic":
        ok = cls.family is TriangleFamily.ANTIPODAL_HYPERBOLIC
    elif fam == "lucilateral":
        # lucilateral triangles are degenerate by construction; keep them
        return cls.proper_kind is ProperKind.LUCILATERAL
    else:
        ok = cls.proper_kind is ProperKind(fam)
    if not ok:
        return False
    if cls.degenerate:
        return False
    if fam in ("photosceles_spacelike_base", "photosceles_timelike_base",
               "bimetrical_chorosceles", "bimetrical_chronosceles", "multiple"):
        return True  # lightlike sides defeat the generic conditioning guard
    return _well_conditioned(t, tol)


_CANDIDATES: dict = {
    "hyperbolic": _hyperbolic_candidate,
    "antipodal_hyperbolic": _hyperbolic_candidate,
    "spatiolateral_contractible": _spatiolateral_candidate,
    "spatiolateral_noncontractible": _spatiolateral_candidate,
    "tempolateral": _tempolateral_candidate,
    "chorosceles": _sceles_candidate,
    "chronosceles": _sceles_candidate,
    "lucilateral": _photosceles_candidate,
    "photosceles_spacelike_base": _photosceles_candidate,
    "photosceles_timelike_base": _photosceles_candidate,
    "bimetrical_chorosceles": _one_lightlike_candidate,
    "bimetrical_chronosceles": _one_lightlike_candidate,
    "multiple": _one_lightlike_candidate,
    "strange": _strange_candidate,
    "impossible": _impossible_candidate,
}


def sample_triangle(spec: SampleSpec, tol: Tolerances = DEFAULT_TOL) -> List[Triangle]:
    """Batch of triangles whose classification matches spec.family."""
    rng = np.random.default_rng(spec.seed)
    if spec.family == "mixed":
        return _sample_mixed(spec, rng, tol)
    maker = _CANDIDATES[spec.family]
    budget = _Budget(spec)
    out: List[Triangle] = []
    while len(out) < spec.count:
        budget.spend()
        try:
            t = maker(rng, spec, tol)
        except Exception:
            continue
        if _accepts(spec, t, tol):
            out.append(t)
            budget.accepted += 1
    return out


def _sample_mixed(spec: SampleSpec, rng, tol) -> List[Triangle]:
    pool = [f for f in FAMILIES if f not in ("mixed",)]
    out: List[Triangle] = []
    i = 0
    while len(out) < spec.count:
        fam = pool[i % len(pool)]
        i += 1
        sub = SampleSpec(
            family=fam, count=1, seed=int(rng.integers(0, 2**32)),
            max_rapidity=spec.max_rapidity, rejection_budget=spec.rejection_budget,
        )
        out.extend(sample_triangle(sub, tol))
    return out


def sample_segment(
    kind: SegmentKind, rng: np.random.Generator, tol: Tolerances = DEFAULT_TOL
) -> tuple:
    """Endpoint pair whose segment has the requested kind."""
    targets = {
        SegmentKind.HYPERBOLIC: Component.H2,
        SegmentKind.ANTIPODAL_HYPERBOLIC: Component.NEG_H2,
        SegmentKind.DE_SITTER_SPACELIKE: Component.DE_SITTER,
        SegmentKind.DE_SITTER_TIMELIKE: Component.DE_SITTER,
    }
    if kind not in targets:
        raise UnsupportedFamily(f"cannot sample segments of kind {kind}")
    comp = targets[kind]
    cap = 1.5
    for _ in range(100_000):
        a = sample_point(comp, rng, cap, tol)
        b = sample_point(comp, rng, cap, tol)
        try:
            k = segment_kind(a, b, tol)
        except Exception:
            continue
        if k is kind:
            if k is SegmentKind.DE_SITTER_TIMELIKE:
                # keep only pairs whose hyperbola parametrization reaches b at
                # t = distance, i.e. the timelike-difference branch
                diff = a.coords - b.coords
                if classify_vector(diff, tol) is not CausalClass.TIMELIKE:
                    continue
            d = distance(a, b, tol)
            if 0.05 < d < (math.pi - 0.05 if k is SegmentKind.DE_SITTER_SPACELIKE
                           else math.inf):
                return a, b
    raise RejectionBudgetExhausted(kind.value, 100_000, 0)


def arc_length_oracle(
    a: SurfacePoint, b: SurfacePoint, steps: int = 10_000,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Composite-Simpson integral of the segment's speed, via finite differences.

    Independent of the closed-form distance: the curve is evaluated from its
    parametrization, the derivative numerically, and the length by quadrature.
    """
    kind = segment_kind(a, b, tol)
    if kind in (SegmentKind.EMPTY, SegmentKind.POINT):
        raise EmptySegment("oracle needs a non-empty, non-trivial segment")
    if kind is SegmentKind.DE_SITTER_LIGHTLIKE:
        raise LightlikeSegment("lightlike segments have zero length by definition")
    if steps % 2:
        steps += 1

    T = distance(a, b, tol)
    A = a.coords.as_array()
    X = tangent_vector(a, b, tol).as_array()
    spacelike = kind is SegmentKind.DE_SITTER_SPACELIKE

    def gamma(ts: np.ndarray) -> np.ndarray:
        if spacelike:
            return np.outer(np.cos(ts), A) + np.outer(np.sin(ts), X)
        return np.outer(np.cosh(ts), A) + np.outer(np.sinh(ts), X)

    ts = np.linspace(0.0, T, steps + 1)
    h = 1e-6 * max(T, 1.0)
    dg = (gamma(ts + h) - gamma(ts - h)) / (2.0 * h)
    q = -dg[:, 0] ** 2 + dg[:, 1] ** 2 + dg[:, 2] ** 2
    speed = np.sqrt(np.abs(q))
    w = np.ones(steps + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float((T / steps) / 3.0 * np.dot(w, speed))
