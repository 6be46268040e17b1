"""Taxonomy, degeneracy, contractibility, and the triangle inequality."""

import math

import pytest

from minktrig.errors import (
    DegenerateTriangle,
    DuplicateVertices,
    NotSpatiolateral,
)
from minktrig.mink import E2, E3, apply_matrix, random_lorentz
from minktrig.samplers import SampleSpec, sample_triangle
from minktrig.surfaces import surface_point, tangent_vector
from minktrig.triangles import (
    ProperKind,
    Triangle,
    TriangleFamily,
    classify_triangle,
    is_contractible,
    is_degenerate,
    triangle_inequality_report,
)

from conftest import SQRT2, SQRT3, vec


def tri(*vecs):
    return Triangle.from_vectors(*(vec(*v) for v in vecs))


W_PLUS = (1 / 7, 5 / 7, 5 / 7)
W_MINUS = (-1 / 7, -5 / 7, -5 / 7)
CHRONO_W = (30 * SQRT2 / 41, 59 * SQRT2 / 82, 59 * SQRT2 / 82)


class TestConstruction:
    def test_duplicate_vertices_rejected(self):
        with pytest.raises(DuplicateVertices):
            tri((0, 1, 0), (0, 1, 0), (0, 0, 1))


class TestClassify:
    def test_contractible_spatiolateral_fixture(self):
        cls, _ = classify_triangle(tri((0, 1, 0), (0, 0, 1), W_PLUS))
        assert cls.proper_kind is ProperKind.SPATIOLATERAL_CONTRACTIBLE

    def test_noncontractible_spatiolateral_fixture(self):
        cls, _ = classify_triangle(tri((0, 1, 0), (0, 0, 1), W_MINUS))
        assert cls.proper_kind is ProperKind.SPATIOLATERAL_NONCONTRACTIBLE

    def test_chronosceles_fixture(self):
        cls, sides = classify_triangle(tri((0, 1, 0), (0, 0, 1), CHRONO_W))
        assert cls.proper_kind is ProperKind.CHRONOSCELES
        assert [s.label for s in sides] == ["a", "b", "c"]

    def test_strange_triangle(self):
        cls, _ = classify_triangle(tri((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert cls.family is TriangleFamily.STRANGE

    def test_vertex_permutation_invariance(self):
        t1 = tri((0, 1, 0), (0, 0, 1), CHRONO_W)
        t2 = tri(CHRONO_W, (0, 1, 0), (0, 0, 1))
        c1, _ = classify_triangle(t1)
        c2, _ = classify_triangle(t2)
        assert c1.family == c2.family
        assert c1.proper_kind == c2.proper_kind

    def test_lorentz_invariance(self, rng):
        t = tri((0, 1, 0), (0, 0, 1), W_PLUS)
        c1, _ = classify_triangle(t)
        m = random_lorentz(rng)
        t2 = Triangle.from_vectors(*(apply_matrix(m, v.coords) for v in t.vertices()))
        c2, _ = classify_triangle(t2)
        assert (c1.family, c1.proper_kind) == (c2.family, c2.proper_kind)


class TestDegenerate:
    def test_coplanar_with_origin(self):
        assert is_degenerate(tri((0, 1, 0), (0, 0, 1), (0, SQRT2 / 2, SQRT2 / 2)))

    def test_contractible_fixture_not_degenerate(self):
        assert not is_degenerate(tri((0, 1, 0), (0, 0, 1), W_PLUS))

    def test_lucilateral_always_degenerate(self):
        for t in sample_triangle(SampleSpec(family="lucilateral", count=30, seed=3)):
            assert is_degenerate(t)


class TestContractibility:
    def test_fixtures(self):
        assert is_contractible(tri((0, 1, 0), (0, 0, 1), W_PLUS))
        assert not is_contractible(tri((0, 1, 0), (0, 0, 1), W_MINUS))

    def test_throat_equilateral_is_noncontractible(self):
        # vertices at thirds of the throat circle, pushed slightly off the
        # degenerate plane
        eps = 0.05
        pts = []
        for k, s in zip(range(3), (eps, -eps, eps)):
            th = 2 * math.pi * k / 3
            pts.append((math.sinh(s), math.cosh(s) * math.cos(th),
                        math.cosh(s) * math.sin(th)))
        assert not is_contractible(tri(*pts))

    def test_requires_spatiolateral(self):
        with pytest.raises(NotSpatiolateral):
            is_contractible(tri((0, 1, 0), (0, 0, 1), CHRONO_W))

    def test_requires_non_degenerate(self):
        with pytest.raises(DegenerateTriangle):
            is_contractible(tri((0, 1, 0), (0, 0, 1), (0, SQRT2 / 2, SQRT2 / 2)))

    def test_agrees_with_side_sum_criterion(self):
        for fam in ("spatiolateral_contractible", "spatiolateral_noncontractible"):
            for t in sample_triangle(SampleSpec(family=fam, count=50, seed=5)):
                _, sides = classify_triangle(t)
                total = sum(s.length for s in sides)
                assert is_contractible(t) == (total < 2 * math.pi)


class TestTempolateralStructure:
    def test_apex_unique(self):
        # exactly one vertex sees the other two in opposite time directions
        for t in sample_triangle(SampleSpec(family="tempolateral", count=50, seed=7)):
            apexes = 0
            verts = t.vertices()
            for i in range(3):
                others = [verts[j] for j in range(3) if j != i]
                s = [tangent_vector(verts[i], o).x1 > 0 for o in others]
                apexes += s[0] != s[1]
            assert apexes == 1

    def test_apex_side_dominates(self):
        from minktrig.trig import measure

        for t in sample_triangle(SampleSpec(family="tempolateral", count=50, seed=9)):
            m = measure(t)
            a, b, c = m.sides
            assert a > b + c


class TestInequality:
    def test_worked_examples(self):
        sixth = 6 * math.pi / 25
        cases = [
            (tri((0, 1, 0), (0, 0, 1), CHRONO_W), False),
            (tri((0, 1, 0), (0, SQRT3 / 2, -0.5), (41, 29, 29)), False),
            (tri((0, 1, 0), (0, SQRT2 / 2, SQRT2 / 2), (41, 29, 29)), True),
            (tri((1, 0, SQRT2), (-1, 0, SQRT2), (0, SQRT3 / 2, 0.5)), False),
            (tri((0, 1, 0), (20 / 21, 0, 29 / 21),
                 (0, math.cos(sixth), math.sin(sixth))), False),
            (tri((1, 0, SQRT2), (0, 0, 1), (0, SQRT3 / 2, 0.5)), True),
        ]
        for t, expected in cases:
            assert triangle_inequality_report(t).holds is expected

    def test_chronosceles_fixture_lengths(self):
        rep = triangle_inequality_report(tri((0, 1, 0), (0, 0, 1), CHRONO_W))
        assert rep.lengths[0] + rep.lengths[1] < rep.lengths[2]

    def test_prediction_matches_outcome_per_family(self):
        families = (
            "hyperbolic", "antipodal_hyperbolic", "tempolateral",
            "spatiolateral_contractible", "spatiolateral_noncontractible",
            "lucilateral", "photosceles_spacelike_base",
            "photosceles_timelike_base",
        )
        for fam in families:
            for t in sample_triangle(SampleSpec(family=fam, count=20, seed=11)):
                rep = triangle_inequality_report(t)
                if rep.predicted is not None:
                    assert rep.predicted == rep.holds, fam

    def test_contractible_has_one_dominant_side(self):
        spec = SampleSpec(family="spatiolateral_contractible", count=50, seed=13)
        for t in sample_triangle(spec):
            a, b, c = triangle_inequality_report(t).lengths
            dominant = sum([a > b + c, b > a + c, c > a + b])
            assert dominant == 1

    def test_bimetrical_prediction_is_isosceles_criterion(self):
        for fam in ("bimetrical_chorosceles", "bimetrical_chronosceles"):
            for t in sample_triangle(SampleSpec(family=fam, count=20, seed=15)):
                rep = triangle_inequality_report(t)
                finite = sorted(x for x in rep.lengths if x > 0.0)
                isosceles = abs(finite[0] - finite[1]) <= 1e-9
                assert rep.predicted == isosceles
                assert rep.holds == rep.predicted
