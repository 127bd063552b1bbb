"""Tests for the Jacobi-field tube calculus and spectra."""

import numpy as np
import pytest

from isoparam import (
    ANVector,
    FocalRadius,
    InvalidCodimension,
    InvalidK,
    NotNormal,
    TubeSpec,
    build_w,
    jacobi_scalars,
    lohnherr_spectrum,
    normal_kahler_angle,
    numeric_shape_operator,
    parallel_data,
    random_subspace,
    standard_spectrum,
    subspace_from_blocks,
    tube_char_poly,
    tube_char_roots,
    tube_mean_curvature,
    tube_spectrum_at,
)
from isoparam.tube_geometry import angle_factor_cubic

C = -4.0


def normal_vector(W, coefs):
    v = W.w_perp_basis.T @ np.asarray(coefs, dtype=float)
    v /= np.linalg.norm(v)
    return ANVector(0.0, v[0::2] + 1j * v[1::2], 0.0, W.c)


class TestJacobiScalars:
    def test_initial_conditions(self):
        for nu in (-1.3, 0.0, 0.7, 2.5):
            g, gp, h, hp = jacobi_scalars(nu, 0.0, C)
            assert g == 1.0 and h == 0.0
            assert abs(gp + nu) < 1e-15  # g' (0) = -nu
            assert hp == -1.0

    def test_focal_zero_of_g_mu(self):
        # oracle: cosh(1) - coth(1) sinh(1) = 0
        mu = np.cosh(1) / np.sinh(1)
        assert abs(np.cosh(1) - mu * np.sinh(1)) < 1e-15
        g, _, _, _ = jacobi_scalars(mu, 1.0, C)
        assert abs(g) < 1e-15

    def test_g_lambda_at_one_is_sech(self):
        # oracle: (cosh^2 - sinh^2)/cosh = sech
        g, _, _, _ = jacobi_scalars(np.tanh(1), 1.0, C)
        assert abs(g - 1 / np.cosh(1)) < 1e-15

    def test_solves_jacobi_equation(self):
        # 4 zeta'' + c zeta = 0 via finite differences
        h = 1e-4
        for nu in (0.4, 1.7):
            for t in (0.3, 1.1):
                gm = jacobi_scalars(nu, t - h, C)[0]
                g0, gp, hh, hp = jacobi_scalars(nu, t, C)
                gp_ = jacobi_scalars(nu, t + h, C)
                second = (gp_[0] - 2 * g0 + gm) / h**2
                assert abs(4 * second + C * g0) < 1e-5
                fd = (gp_[0] - gm) / (2 * h)
                assert abs(fd - gp) < 1e-8


class TestParallelData:
    def test_start_values(self):
        r = 1.3
        lam, mu, alpha, beta, focal = parallel_data(r, 0.0, C)
        assert abs(lam - np.tanh(r)) < 1e-15
        assert abs(mu - 1 / np.tanh(r)) < 1e-15
        assert alpha == 0.0 and abs(beta - 1.0) < 1e-15
        assert not focal

    def test_focal_endpoint(self):
        lam, mu, alpha, beta, focal = parallel_data(1.0, 1.0, C)
        assert lam == 0.0 and mu == np.inf and focal

    def test_lambda_collapses(self):
        for r in (0.5, 2.0, 5.0):
            lam = parallel_data(r, r - 1e-6, C)[0]
            assert lam < 1e-5 * np.sqrt(-C)

    def test_monotone(self):
        r = 2.0
        ts = np.linspace(0, r * 0.99, 40)
        lams = [parallel_data(r, t, C)[0] for t in ts]
        mus = [parallel_data(r, t, C)[1] for t in ts]
        assert np.all(np.diff(lams) < 0)
        assert np.all(np.diff(mus) > 0)

    def test_evolved_seminull_frame(self):
        # The frame built from alpha(t), beta(t) realizes the semi-null
        # relations with lambda(t) for the evolved operator -Z'(t) Z(t)^-1
        # acting on the parallel translation of the original (E1, E2, E3).
        G = np.array([[0.0, 1, 0], [1, 0, 0], [0, 0, 1]])
        for r, c in [(1.0, -4.0), (0.6, -1.0), (2.3, -2.5)]:
            s0 = np.sqrt(-c) / 2
            lam0 = s0 * np.tanh(s0 * r)
            for t in np.linspace(0, 0.95 * r, 15):
                g, gp, h, hp = jacobi_scalars(lam0, t, c)
                Z = np.array([[g, 0, h], [0, g, 0], [0, h, g]])
                Zp = np.array([[gp, 0, hp], [0, gp, 0], [0, hp, gp]])
                M = -Zp @ np.linalg.inv(Z)
                lam, mu, alpha, beta, _ = parallel_data(r, t, c)
                E1 = np.array([beta, 0, 0])
                E2 = np.array([-(alpha**2) / (8 * beta**3), 1 / beta, -alpha / (2 * beta**2)])
                E3 = np.array([alpha / (2 * beta), 0, 1.0])
                assert np.abs(M @ E1 - lam * E1).max() < 1e-10
                assert np.abs(M @ E2 - (lam * E2 + E3)).max() < 1e-10
                assert np.abs(M @ E3 - (E1 + lam * E3)).max() < 1e-10
                gram = np.array([v1 @ G @ v2 for v1 in (E1, E2, E3) for v2 in (E1, E2, E3)])
                expect = np.array([0, 1, 0, 1, 0, 0, 0, 0, 1.0])
                assert np.abs(gram - expect).max() < 1e-10
                assert beta > 0 and alpha >= 0


class TestCharPoly:
    def test_degree(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            n = int(rng.integers(2, 7))
            k = int(rng.integers(1, 2 * n - 2))
            poly = tube_char_poly(n, k, 1.0, np.pi / 3 if k > 1 else np.pi / 2, C)
            assert len(poly) - 1 == 2 * n - 1

    def test_trace_is_mean_curvature(self):
        # oracle for the identity: (k-1) coth + tanh-terms reassemble into
        # the closed mean-curvature formula, independently of phi
        rng = np.random.default_rng(1)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            k = int(rng.integers(1, 2 * n - 2))
            r = float(rng.uniform(0.05, 3.0))
            phi = np.pi / 2 if k == 1 else float(rng.uniform(0, np.pi / 2))
            c = float(rng.choice([-4.0, -1.0]))
            roots = tube_char_roots(n, k, r, phi, c)
            H = tube_mean_curvature(n, k, r, c)
            assert abs(roots.sum() - H) < 1e-9 * abs(H)

    def test_hopf_value_at_angle_zero(self):
        # oracle: evaluate the cubic at sqrt(-c) coth(r sqrt(-c))
        for r in (0.5, 1.0, 2.0):
            lam = np.tanh(r)
            x = 2 / np.tanh(2 * r)
            val = np.polyval(angle_factor_cubic(lam, 0.0, C), x)
            assert abs(val) < 1e-12
            roots = tube_char_roots(3, 2, r, 0.0, C)
            assert np.abs(roots - x).min() < 1e-8

    def test_k1_reading_drops_mu_root(self):
        # mu = -c/(4 lam) is an exact root of the pi/2 cubic, so the k = 1
        # polynomial is the quadratic factor times (lam - x)^(2n-3)
        r, n = 0.8, 3
        lam = np.tanh(r)
        mu = 1 / lam
        assert abs(np.polyval(angle_factor_cubic(lam, np.pi / 2, C), mu)) < 1e-12
        roots = tube_char_roots(n, 1, r, np.pi / 2, C)
        assert len(roots) == 2 * n - 1
        assert np.abs(roots - mu).min() > 0.1  # mu itself does not appear

    def test_invalid_codimension(self):
        with pytest.raises(InvalidCodimension):
            tube_char_poly(3, 4, 1.0, 0.0, C)  # k = 2n-2 excluded
        with pytest.raises(FocalRadius):
            tube_char_poly(3, 2, 0.0, 0.0, C)


class TestMeanCurvature:
    def test_minimal_ruled_limit(self):
        assert tube_mean_curvature(3, 1, 0.0, C) == 0.0
        assert abs(tube_mean_curvature(4, 1, 1e-8, C)) < 1e-6

    def test_frozen_example(self):
        # oracle: direct evaluation of the closed formula
        expect = (1 + 6 * np.sinh(1) ** 2) / (np.sinh(1) * np.cosh(1))
        H = tube_mean_curvature(3, 2, 1.0, C)
        assert abs(H - expect) < 1e-12
        assert abs(H - 5.121006065278155) < 1e-12
        assert abs(H - 5.1210) < 1e-3

    def test_focal_radius_error(self):
        with pytest.raises(FocalRadius):
            tube_mean_curvature(3, 2, 0.0, C)


class TestStandardSpectra:
    def test_tube_chk_example(self):
        spec = standard_spectrum("tube-chk", 3, r=1.0, c=C, k=1)
        values = {round(v, 12): (a, g) for v, a, g in spec.entries}
        assert values[round(np.tanh(1), 12)] == (2, 2)
        assert values[round(1 / np.tanh(1), 12)] == (2, 2)
        assert values[round(2 / np.tanh(2), 12)] == (1, 1)
        assert abs(spec.hopf_value - 2 / np.tanh(2)) < 1e-15

    def test_horosphere(self):
        for n in (2, 3, 5):
            spec = standard_spectrum("horosphere", n, c=C)
            assert spec.entries == ((1.0, 2 * n - 2, 2 * n - 2), (2.0, 1, 1))
            assert spec.hopf_value == 2.0

    def test_rhn_merging_radius(self):
        r_star = np.log(2 + np.sqrt(3)) / np.sqrt(-C)
        spec = standard_spectrum("tube-rhn", 3, r=r_star, c=C)
        # lambda_1 = lambda_3 merge into one entry
        assert len(spec.entries) == 2
        mults = sorted(a for _, a, _ in spec.entries)
        assert mults == [2, 3]

    def test_lohnherr(self):
        spec = lohnherr_spectrum(3, C)
        assert spec.entries == ((-1.0, 1, 1), (0.0, 3, 3), (1.0, 1, 1))
        assert spec.trace() == 0.0

    def test_invalid_k(self):
        with pytest.raises(InvalidK):
            standard_spectrum("tube-chk", 3, r=1.0, c=C, k=5)
        with pytest.raises(InvalidK):
            standard_spectrum("nonsense", 3, r=1.0, c=C)


class TestTubeSpectrumAt:
    def test_complex_normal_space_matches_chk(self):
        # w = C^1 inside C^2 (n = 3): W_w is a totally geodesic CH^2,
        # i.e. the k_CH = n - k/2 = 2 example
        w = subspace_from_blocks(2, [(0.0, 2)])
        W = build_w(w, 3, C)
        spec = TubeSpec(W, 0.9)
        xi = normal_vector(W, [1.0, 0.0])
        assert normal_kahler_angle(W, xi) < 1e-9
        got = tube_spectrum_at(spec, xi)
        expect = standard_spectrum("tube-chk", 3, r=0.9, c=C, k=2)
        assert got.matches(expect, tol=1e-9)

    def test_trace_equals_mean_curvature(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            m = n - 1
            k = int(rng.integers(1, 2 * n - 2))
            W = build_w(random_subspace(m, 2 * m - k, int(rng.integers(2**31))), n, C)
            spec = TubeSpec(W, float(rng.uniform(0.2, 2.0)))
            xi = normal_vector(W, rng.standard_normal(k))
            got = tube_spectrum_at(spec, xi)
            assert abs(got.trace() - tube_mean_curvature(n, k, spec.r, C)) < 1e-9

    def test_nonconstant_angle_gives_varying_spectra(self):
        # w = a real line in C^2: w_perp has angles {0, pi/2}
        w = random_subspace(2, 1, seed=4)
        W = build_w(w, 3, C)
        spec = TubeSpec(W, 1.0)
        angles = []
        spectra = []
        for coefs in np.eye(3):
            xi = normal_vector(W, coefs + 0.1)
            angles.append(normal_kahler_angle(W, xi))
            spectra.append(tube_spectrum_at(spec, xi))
        assert max(angles) - min(angles) > 0.1
        assert not spectra[0].matches(spectra[np.argmax(angles)], tol=1e-6)

    def test_rejects_non_normal(self):
        w = random_subspace(2, 1, seed=5)
        W = build_w(w, 3, C)
        spec = TubeSpec(W, 1.0)
        bad = ANVector(1.0, np.zeros(2, complex), 0.0, C)
        with pytest.raises(NotNormal):
            tube_spectrum_at(spec, bad)


class TestNumericShapeOperator:
    def test_matches_char_roots(self):
        rng = np.random.default_rng(6)
        for _ in range(30):
            n = int(rng.integers(2, 6))
            m = n - 1
            k = int(rng.integers(1, 2 * n - 2))
            W = build_w(random_subspace(m, 2 * m - k, int(rng.integers(2**31))), n, C)
            spec = TubeSpec(W, float(rng.uniform(0.2, 2.5)))
            xi = normal_vector(W, rng.standard_normal(k))
            S = numeric_shape_operator(spec, xi)
            evals = np.linalg.eigvalsh(0.5 * (S.matrix + S.matrix.T))
            phi = normal_kahler_angle(W, xi)
            roots = tube_char_roots(n, k, spec.r, phi, C)
            assert np.abs(np.sort(evals) - roots).max() < 1e-8

    def test_symmetric_in_riemannian_frame(self):
        w = random_subspace(3, 2, seed=7)
        W = build_w(w, 4, C)
        spec = TubeSpec(W, 1.3)
        xi = normal_vector(W, [1.0, -0.5, 0.3, 0.8])
        S = numeric_shape_operator(spec, xi)
        assert np.abs(S.matrix - S.matrix.T).max() < 1e-10

    def test_complex_case_diagonalizes_to_chk(self):
        w = subspace_from_blocks(3, [(0.0, 2)])  # C^1 in C^3, n = 4, k = 4
        W = build_w(w, 4, C)
        spec = TubeSpec(W, 0.7)
        xi = normal_vector(W, [1.0, 0.0, 0.0, 0.0])
        S = numeric_shape_operator(spec, xi)
        evals = np.sort(np.linalg.eigvalsh(0.5 * (S.matrix + S.matrix.T)))
        expect = standard_spectrum("tube-chk", 4, r=0.7, c=C, k=2).expanded()
        assert np.abs(evals - expect).max() < 1e-9
