"""Tests for the numeric model of quaternionic hyperbolic space."""

import numpy as np
import pytest

import quathyp.geometry as geo

RNG = np.random.default_rng(90125)


def random_quat(shape=()):
    return RNG.standard_normal(shape + (4,))


def random_negative_vector(m):
    """A random line vector with h(v, v) < 0, built inside the unit ball."""
    b = RNG.uniform(-0.4, 0.4, size=(m, 4))
    return geo.ball_point_to_line(b)


class TestQuaternionArithmetic:
    def test_multiplication_table(self):
        i, j, k = geo.QUAT_I, geo.QUAT_J, geo.QUAT_K
        assert np.allclose(geo.quat_mul(i, j), k)
        assert np.allclose(geo.quat_mul(j, k), i)
        assert np.allclose(geo.quat_mul(k, i), j)
        for u in (i, j, k):
            assert np.allclose(geo.quat_mul(u, u), -geo.QUAT_ONE)

    def test_conjugation_reverses_products(self):
        p, q = random_quat(), random_quat()
        lhs = geo.quat_conj(geo.quat_mul(p, q))
        rhs = geo.quat_mul(geo.quat_conj(q), geo.quat_conj(p))
        assert np.allclose(lhs, rhs)

    def test_norm_is_multiplicative(self):
        p, q = random_quat((5,)), random_quat((5,))
        lhs = geo.quat_norm_sq(geo.quat_mul(p, q))
        assert np.allclose(lhs, geo.quat_norm_sq(p) * geo.quat_norm_sq(q))

    def test_broadcasting(self):
        p = random_quat((2, 3))
        out = geo.quat_mul(p, geo.QUAT_J)
        assert out.shape == (2, 3, 4)


class TestFormAndDistance:
    def test_base_point_has_norm_minus_one(self):
        base = geo.base_point(2)
        assert np.allclose(geo.form_h(base, base), -geo.QUAT_ONE)

    def test_hermitian_symmetry(self):
        v, w = random_negative_vector(3), random_negative_vector(3)
        assert np.allclose(geo.form_h(v, w), geo.quat_conj(geo.form_h(w, v)))

    def test_distance_is_a_metric_on_samples(self):
        pts = [random_negative_vector(2) for _ in range(3)]
        for v in pts:
            assert geo.distance(v, v) == pytest.approx(0.0, abs=1e-7)
        d01 = geo.distance(pts[0], pts[1])
        assert d01 == pytest.approx(geo.distance(pts[1], pts[0]), abs=1e-10)
        assert d01 + geo.distance(pts[1], pts[2]) >= geo.distance(pts[0], pts[2]) - 1e-10

    def test_radial_distance_in_ball_model(self):
        """A ball point at radius r sits at distance 2 artanh(r) from the center."""
        for m in (2, 3):
            for r in (0.3, 0.7):
                b = np.zeros((m, 4))
                b[0, 0] = r
                v = geo.ball_point_to_line(b)
                assert geo.distance(geo.base_point(m), v) == pytest.approx(
                    2 * np.arctanh(r), abs=1e-12
                )

    def test_projective_scaling_is_free(self):
        v = random_negative_vector(2)
        alpha = random_quat()
        assert geo.distance(v, geo.quat_mul(v, alpha)) == pytest.approx(0.0, abs=1e-10)

    def test_positive_vectors_rejected(self):
        v = np.zeros((3, 4))
        v[0, 0] = 1.0
        with pytest.raises(ValueError):
            geo.distance(v, geo.base_point(2))

    def test_group_invariance(self):
        for seed in range(3):
            A = geo.random_sp_element(2, seed=seed)
            v, w = random_negative_vector(2), random_negative_vector(2)
            d0 = geo.distance(v, w)
            d1 = geo.distance(geo.mat_vec(A, v), geo.mat_vec(A, w))
            assert abs(d0 - d1) < 1e-8


class TestBallModel:
    def test_round_trip(self):
        b = RNG.uniform(-0.3, 0.3, size=(2, 4))
        v = geo.ball_point_to_line(b)
        back = geo.ball_line_convert(v)
        assert np.allclose(back[:-1], b)
        assert np.allclose(back[-1], geo.QUAT_ONE)

    def test_negative_lines_land_inside_the_ball(self):
        v = random_negative_vector(3)
        assert geo.ball_norm_sq(geo.ball_line_convert(v)) < 1.0

    def test_vanishing_last_coordinate_is_infinity(self):
        v = np.zeros((3, 4))
        v[0, 0] = 1.0
        with pytest.raises(ValueError, match="infinity"):
            geo.ball_line_convert(v)


class TestGroupMembership:
    def test_identity_and_random_elements(self):
        eye = np.zeros((3, 3, 4))
        eye[np.arange(3), np.arange(3), 0] = 1.0
        assert geo.sp_check(eye)
        assert not geo.sp_check(2.0 * eye)
        for seed in (0, 1, 2):
            assert geo.sp_check(geo.random_sp_element(2, seed=seed))

    def test_exponential_lands_in_the_group(self):
        for m in (2, 3):
            basis = geo.lie_basis(m)
            X = 0.3 * basis[1] - 0.2 * basis[7] + 0.1 * basis[-1]
            assert geo.lie_algebra_check(X)
            assert geo.sp_check(geo.matrix_exp(X))

    def test_exponential_inverts(self):
        X = 0.25 * geo.lie_basis(2)[3]
        prod = geo.mat_mul(geo.matrix_exp(X), geo.matrix_exp(-X))
        eye = np.zeros_like(prod)
        eye[np.arange(3), np.arange(3), 0] = 1.0
        assert np.allclose(prod, eye, atol=1e-12)

    def test_complex_matrix_round_trip(self):
        A = geo.random_sp_element(2, seed=5)
        assert np.allclose(geo.from_complex_matrix(geo.to_complex_matrix(A)), A)


class TestLieAlgebraBasis:
    @pytest.mark.parametrize("m,expected", [(2, 21), (3, 36), (4, 55)])
    def test_dimension(self, m, expected):
        assert geo.lie_dim(m) == expected
        assert len(geo.lie_basis(m)) == expected

    def test_membership(self):
        for B in geo.lie_basis(2):
            assert geo.lie_algebra_check(B)

    def test_coordinates_invert_the_basis(self):
        basis = geo.lie_basis(2)
        for i in (0, 5, 13, 20):
            coords = geo.coordinates(basis[i], 2)
            expected = np.zeros(len(basis))
            expected[i] = 1.0
            assert np.allclose(coords, expected, atol=1e-10)

    def test_bracket_closure(self):
        basis = geo.lie_basis(2)
        for _ in range(6):
            i, j = RNG.integers(0, len(basis), size=2)
            assert geo.lie_algebra_check(geo.bracket(basis[i], basis[j]))

    def test_bracket_antisymmetry_and_jacobi(self):
        basis = geo.lie_basis(2)
        A, B, C = basis[2], basis[9], basis[17]
        assert np.allclose(geo.bracket(A, B), -geo.bracket(B, A))
        jac = (
            geo.bracket(A, geo.bracket(B, C))
            + geo.bracket(B, geo.bracket(C, A))
            + geo.bracket(C, geo.bracket(A, B))
        )
        assert np.allclose(jac, 0.0, atol=1e-12)

    @pytest.mark.parametrize("m", [2, 3])
    def test_structural_bracket_identities_are_exact(self, m):
        assert geo.bracket_identity_dev(m) == 0.0


class TestKillingForm:
    def test_symmetry(self):
        basis = geo.lie_basis(2)
        A, B = basis[4], basis[11]
        assert geo.killing_value(A, B, 2) == pytest.approx(
            geo.killing_value(B, A, 2), rel=1e-10
        )

    def test_ad_invariance(self):
        basis = geo.lie_basis(2)
        A, B, C = basis[1], basis[8], basis[19]
        lhs = geo.killing_value(geo.bracket(A, B), C, 2)
        rhs = -geo.killing_value(B, geo.bracket(A, C), 2)
        assert lhs == pytest.approx(rhs, abs=1e-8)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_value_on_first_corner_generator(self, m):
        # The trace form evaluates to 8(m + 2) on this generator.
        X = geo.X_element(m, 1, geo.QUAT_ONE)
        assert geo.killing_value(X, X, m) == pytest.approx(8 * (m + 2), abs=1e-9)

    def test_base_metric_normalization(self):
        for m in (2, 3):
            X = geo.X_element(m, 1, geo.QUAT_ONE)
            w = geo.tangent_of_corner(X, m)
            g = geo.metric_at(geo.base_point(m), w, w)
            assert g[0] == pytest.approx(4.0, abs=1e-12)
            assert np.allclose(g[1:], 0.0, atol=1e-12)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_killing_to_metric_ratio_is_constant(self, m):
        ratios = geo.killing_metric_ratios(m, samples=20, seed=3)
        assert np.allclose(ratios, 2 * (m + 2), atol=1e-9)
        assert geo.metric_scaling_check(m, samples=20, seed=3, reference=2 * (m + 2)) < 1e-9

    def test_rank_below_two_rejected(self):
        with pytest.raises(ValueError):
            geo.killing_metric_ratios(1, samples=1, seed=0)


class TestSubspaceClassification:
    @pytest.mark.parametrize("m", [2, 3])
    @pytest.mark.parametrize(
        "kind", [geo.TOTALLY_REAL, geo.TOTALLY_COMPLEX, geo.TOTALLY_QUATERNIONIC]
    )
    def test_standard_spans(self, m, kind):
        W = geo.standard_span(m, kind)
        assert geo.lie_triple_closure(W)
        assert geo.classify_subspace(W) == kind

    def test_span_sizes(self):
        assert geo.standard_span(2, geo.TOTALLY_REAL).count == 2
        assert geo.standard_span(3, geo.TOTALLY_REAL, dim=3).count == 3
        assert geo.standard_span(2, geo.TOTALLY_COMPLEX).count == 2
        assert geo.standard_span(2, geo.TOTALLY_QUATERNIONIC).count == 8

    def test_complex_span_survives_right_rotation(self):
        q = random_quat()
        q = q / np.sqrt(geo.quat_norm_sq(q))
        W = geo.standard_span(3, geo.TOTALLY_COMPLEX)
        rotated = geo.SubspaceSpan(geo.quat_mul(W.vectors, q))
        assert geo.classify_subspace(rotated) == geo.TOTALLY_COMPLEX

    def test_perturbation_breaks_closure(self):
        e1 = np.zeros((2, 4))
        e1[0, 0] = 1.0
        mixed = geo.quat_mul(
            np.roll(e1, 1, axis=0), geo.QUAT_J
        ) + 0.3 * geo.quat_mul(e1, geo.QUAT_I)
        W = geo.SubspaceSpan(np.stack([e1, mixed]))
        assert not geo.lie_triple_closure(W)
        assert geo.classify_subspace(W) == geo.NOT_LIE_TRIPLE

    def test_dependent_vectors_rejected(self):
        e1 = np.zeros((2, 4))
        e1[0, 0] = 1.0
        with pytest.raises(ValueError):
            geo.SubspaceSpan(np.stack([e1, 2.0 * e1]))

    def test_pure_direction_fit(self):
        values = np.array([[0.0, 2.0, 0.0, 0.0], [0.0, -3.0, 0.0, 0.0]])
        direction = geo.fit_pure_direction(values)
        assert np.allclose(np.abs(direction), [1.0, 0.0, 0.0])
        assert geo.fit_pure_direction(np.zeros((3, 4))) is None


class TestReport:
    def test_structure_and_honest_failures(self):
        rep = geo.geometry_report(2, samples=8, seed=7)
        names = [c["name"] for c in rep["checks"]]
        assert len(names) == 10 and len(set(names)) == 10
        by_name = {c["name"]: c for c in rep["checks"]}
        assert by_name["basis-count"]["passed"]
        assert by_name["bracket-identities"]["passed"]
        assert by_name["base-metric"]["passed"]
        assert by_name["distance-invariance"]["passed"]
        assert by_name["triple-classification"]["passed"]
        # the Killing numbers disagree with the quoted reference constants
        assert not by_name["killing-x1"]["passed"]
        assert "32" in by_name["killing-x1"]["detail"]
        assert not by_name["killing-metric-ratio"]["passed"]
        assert not rep["all_passed"]

    def test_rank_below_two_rejected(self):
        with pytest.raises(ValueError):
            geo.geometry_report(1)
