"""Bilinear form, causal classification, Lorentz utilities, plane classification."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minktrig.constants import DEFAULT_TOL
from minktrig.errors import DegenerateSpan, LightlikeNormalization
from minktrig.mink import (
    E1,
    E2,
    E3,
    J_MATRIX,
    CausalClass,
    MVec3,
    PlaneClass,
    apply_matrix,
    boost_e1_e2,
    classify_plane,
    classify_vector,
    cross,
    det3,
    euclid_dot,
    is_lorentz,
    j_transform,
    lorentz_orthogonal_basis,
    minkowski_norm,
    minkowski_product,
    normalize,
    random_lorentz,
)

from conftest import SQRT2, vec

coords = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
vectors = st.builds(MVec3, coords, coords, coords)


class TestMinkowskiProduct:
    def test_signature(self):
        assert minkowski_product(E1, E1) == -1.0
        assert minkowski_product(E2, E2) == 1.0
        assert minkowski_product(E3, E3) == 1.0

    def test_self_orthogonal_lightlike_vector(self):
        x = vec(1, 1, 0)
        assert minkowski_product(x, x) == 0.0

    def test_chorosceles_vertex_product(self):
        a = vec(1, 0, SQRT2)
        b = vec(-1, 0, SQRT2)
        assert minkowski_product(a, b) == pytest.approx(3.0)

    @given(vectors, vectors)
    def test_symmetry(self, x, y):
        assert minkowski_product(x, y) == pytest.approx(
            minkowski_product(y, x), abs=1e-12
        )

    @given(vectors, vectors, vectors, coords, coords)
    @settings(max_examples=200)
    def test_bilinearity(self, x, y, z, a, b):
        lhs = minkowski_product(a * x + b * z, y)
        rhs = a * minkowski_product(x, y) + b * minkowski_product(z, y)
        assert lhs == pytest.approx(rhs, abs=1e-9)


class TestNormAndNormalize:
    def test_unit_timelike(self):
        assert minkowski_norm(E1) == 1.0

    def test_lightlike_norm_zero(self):
        assert minkowski_norm(vec(1, 1, 0)) == 0.0

    def test_spacelike_norm(self):
        assert minkowski_norm(vec(0, 3, 4)) == pytest.approx(5.0)

    def test_normalize_timelike(self):
        assert normalize(vec(2, 0, 0)) == E1

    def test_normalize_spacelike(self):
        n = normalize(vec(0, 3, 4))
        assert n.as_tuple() == pytest.approx((0.0, 0.6, 0.8))

    def test_normalize_lightlike_raises(self):
        with pytest.raises(LightlikeNormalization):
            normalize(vec(1, 1, 0))
        with pytest.raises(LightlikeNormalization):
            normalize(vec(0, 0, 0))


class TestClassifyVector:
    def test_examples(self):
        assert classify_vector(E1) is CausalClass.TIMELIKE
        assert classify_vector(vec(1, 1, 0)) is CausalClass.LIGHTLIKE
        assert classify_vector(E2) is CausalClass.SPACELIKE

    def test_zero_vector_is_spacelike_by_convention(self):
        assert classify_vector(vec(0, 0, 0)) is CausalClass.SPACELIKE

    def test_lightlike_pair_orthogonal_iff_dependent(self, rng):
        # two lightlike vectors are Minkowski orthogonal exactly when one is
        # a multiple of the other
        for _ in range(200):
            t1, t2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
            u = vec(1, math.cos(t1), math.sin(t1))
            v = vec(1, math.cos(t2), math.sin(t2))
            p = minkowski_product(u, v)
            dependent = cross(u, v).euclid_norm() < 1e-9
            assert (abs(p) < 1e-9) == dependent


class TestCrossAndDet:
    def test_basis_cross(self):
        assert cross(E2, E3) == E1

    def test_self_cross_zero(self):
        x = vec(3, -1, 2)
        assert cross(x, x).is_zero()

    def test_polar_fixture_cross(self):
        got = cross(vec(SQRT2, 1, 0), vec(SQRT2, 0, 1))
        assert got.as_tuple() == pytest.approx((1.0, -SQRT2, -SQRT2))

    def test_j_normal_minkowski_orthogonality(self, rng):
        for _ in range(100):
            x = MVec3(*rng.uniform(-2, 2, size=3))
            y = MVec3(*rng.uniform(-2, 2, size=3))
            n = j_transform(cross(x, y))
            assert minkowski_product(n, x) == pytest.approx(0.0, abs=1e-12)
            assert minkowski_product(n, y) == pytest.approx(0.0, abs=1e-12)

    def test_det_basis(self):
        assert det3(E1, E2, E3) == 1.0

    def test_det_repeated_column(self):
        a, c = vec(1, 2, 3), vec(4, 5, 6)
        assert det3(a, a, c) == 0.0

    def test_det_polar_fixture(self):
        d = det3(vec(SQRT2, 1, 0), vec(SQRT2, 0, 1), vec(SQRT2, -1, 0))
        assert d == pytest.approx(2.0 * SQRT2)

    @given(vectors, vectors, vectors)
    @settings(max_examples=100)
    def test_det_equals_cross_dot(self, a, b, c):
        assert det3(a, b, c) == pytest.approx(
            euclid_dot(cross(a, b), c), abs=1e-9
        )


class TestJTransform:
    def test_negates_time_component(self):
        assert j_transform(vec(1, 2, 3)) == vec(-1, 2, 3)

    def test_involution(self):
        x = vec(5, -2, 7)
        assert j_transform(j_transform(x)) == x

    def test_preserves_product(self):
        x, y = vec(1, 1, 0), vec(0, 1, 1)
        assert minkowski_product(x, y) == 1.0
        assert minkowski_product(j_transform(x), j_transform(y)) == 1.0


class TestIsLorentz:
    def test_identity(self):
        assert is_lorentz(np.eye(3))

    def test_j_matrix(self):
        assert is_lorentz(J_MATRIX)

    def test_scaling_is_not_lorentz(self):
        assert not is_lorentz(np.diag([2.0, 1.0, 1.0]))

    def test_random_lorentz_satisfies_predicate(self, rng):
        for _ in range(50):
            assert is_lorentz(random_lorentz(rng))
            assert is_lorentz(random_lorentz(rng, orthochronous=False))

    def test_orthochronous_preserves_forward_sheet(self, rng):
        for _ in range(50):
            m = random_lorentz(rng, orthochronous=True)
            assert m[0, 0] >= 1.0 - 1e-12

    def test_boost_maps_e1(self):
        t = 0.7
        img = apply_matrix(boost_e1_e2(t), E1)
        assert img.as_tuple() == pytest.approx((math.cosh(t), math.sinh(t), 0.0))


class TestLorentzOrthogonalBasis:
    def test_already_orthogonal(self):
        b1, b2 = lorentz_orthogonal_basis(E2, E3)
        assert minkowski_product(b1, b2) == pytest.approx(0.0, abs=1e-12)

    def test_lightlike_plane_second_vector(self):
        b1, b2 = lorentz_orthogonal_basis(E2, E2 + E1)
        assert minkowski_product(b1, b2) == pytest.approx(0.0, abs=1e-12)
        assert classify_vector(b1) is CausalClass.SPACELIKE

    def test_timelike_inputs_still_yield_spacelike_b1(self):
        b1, b2 = lorentz_orthogonal_basis(E1, E1 + E2)
        assert classify_vector(b1) is CausalClass.SPACELIKE
        assert minkowski_product(b1, b2) == pytest.approx(0.0, abs=1e-12)

    def test_degenerate_span_raises(self):
        with pytest.raises(DegenerateSpan):
            lorentz_orthogonal_basis(E2, 2.0 * E2)

    def test_full_basis_has_one_timelike_vector(self, rng):
        # extending the in-plane basis by the J-normal always gives exactly
        # one timelike and two spacelike directions
        for _ in range(100):
            u = MVec3(*rng.uniform(-2, 2, size=3))
            v = MVec3(*rng.uniform(-2, 2, size=3))
            try:
                b1, b2 = lorentz_orthogonal_basis(u, v)
            except DegenerateSpan:
                continue
            b3 = j_transform(cross(u, v))
            kinds = [classify_vector(b) for b in (b1, b2, b3)]
            if CausalClass.LIGHTLIKE in kinds:
                continue
            assert kinds.count(CausalClass.TIMELIKE) == 1


class TestClassifyPlane:
    def test_figure_examples(self):
        assert classify_plane(E2, E3) is PlaneClass.SPACELIKE
        assert classify_plane(E2, E3 + E1) is PlaneClass.LIGHTLIKE
        assert classify_plane(E2, E1) is PlaneClass.TIMELIKE

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateSpan):
            classify_plane(E2, -E2)

    def test_agrees_with_basis_definition(self, rng):
        # oracle: the plane's class is the class of the second vector of a
        # Lorentz orthogonal basis (the first is spacelike by construction)
        mapping = {
            CausalClass.SPACELIKE: PlaneClass.SPACELIKE,
            CausalClass.LIGHTLIKE: PlaneClass.LIGHTLIKE,
            CausalClass.TIMELIKE: PlaneClass.TIMELIKE,
        }
        for _ in range(300):
            u = MVec3(*rng.uniform(-2, 2, size=3))
            v = MVec3(*rng.uniform(-2, 2, size=3))
            try:
                got = classify_plane(u, v)
                b1, b2 = lorentz_orthogonal_basis(u, v)
            except DegenerateSpan:
                continue
            assert got is mapping[classify_vector(b2)]

    def test_lorentz_invariance(self, rng):
        for _ in range(100):
            u = MVec3(*rng.uniform(-2, 2, size=3))
            v = MVec3(*rng.uniform(-2, 2, size=3))
            m = random_lorentz(rng)
            try:
                before = classify_plane(u, v)
            except DegenerateSpan:
                continue
            if before is PlaneClass.LIGHTLIKE:
                continue  # exactly-lightlike planes sit on the tolerance band
            after = classify_plane(apply_matrix(m, u), apply_matrix(m, v))
            assert after is before
