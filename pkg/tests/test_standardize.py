"""Tests for the stationary Gaussian state and standardization."""

import math

import numpy as np
import pytest

from conftest import M0, SQRT2
from gqms.model import (
    GaussianModel,
    diffusion_matrix,
    drift_matrix,
    random_diagonal_model,
    random_valid_model,
    validate,
)
from gqms.standardize import (
    StationaryGaussian,
    bogoliubov_params,
    conjugated_ladder,
    standardized_drifts,
    stationary_gaussian,
    williamson,
)
from gqms.wick import commutator, identity


class TestStationaryGaussian:
    def test_m0(self):
        sg = stationary_gaussian(M0)
        assert abs(sg.omega) < 1e-14
        assert np.allclose(sg.S, 3 * np.eye(2), atol=1e-12)
        assert abs(sg.nu - 3) < 1e-12
        assert np.allclose(sg.M, np.eye(2), atol=1e-12)
        assert abs(sg.beta - math.log(2)) < 1e-12

    def test_m0_with_displacement(self):
        model = GaussianModel(
            omega=1.0, kappa=0j, zeta=-0.5 - 1j, kraus=((SQRT2, 0.0), (0.0, 1.0))
        )
        assert abs(stationary_gaussian(model).omega - 1.0) < 1e-12

    def test_lyapunov_residual(self):
        rng = np.random.default_rng(50)
        for _ in range(200):
            model = random_valid_model(rng)
            sg = stationary_gaussian(model)
            Z, C = drift_matrix(model), diffusion_matrix(model)
            assert np.linalg.norm(Z.T @ sg.S + sg.S @ Z + C) < 1e-12

    def test_rejects_invalid(self):
        with pytest.raises(ValueError, match="invariant"):
            stationary_gaussian(
                GaussianModel(omega=0, kappa=0j, zeta=0j, kraus=((0, 1),))
            )

    def test_pure_state_has_infinite_beta(self):
        model = GaussianModel(omega=0.0, kappa=0j, zeta=0j, kraus=((1.0, 0.0),))
        sg = stationary_gaussian(model)
        assert abs(sg.nu - 1.0) < 1e-12 and sg.beta == math.inf


class TestWilliamson:
    def test_isotropic(self):
        nu, M = williamson(3 * np.eye(2))
        assert abs(nu - 3) < 1e-14 and np.allclose(M, np.eye(2), atol=1e-14)

    def test_diag_4_1(self):
        S = np.diag([4.0, 1.0])
        nu, M = williamson(S)
        assert abs(nu - 2.0) < 1e-14
        G = np.linalg.inv(M)
        assert np.allclose(G.T @ np.diag([nu, nu]) @ G, S, atol=1e-12)

    def test_unit_determinant_gives_nu_one(self):
        rng = np.random.default_rng(51)
        for _ in range(50):
            A = rng.normal(size=(2, 2))
            S = A @ A.T + 0.1 * np.eye(2)
            S /= math.sqrt(np.linalg.det(S))
            nu, _ = williamson(S)
            assert abs(nu - 1.0) < 1e-12

    def test_reconstruction_random(self):
        rng = np.random.default_rng(52)
        for _ in range(200):
            A = rng.normal(size=(2, 2))
            S = A @ A.T + 0.1 * np.eye(2)
            nu, M = williamson(S)
            G = np.linalg.inv(M)
            assert np.linalg.norm(G.T @ np.diag([nu, nu]) @ G - S) < 1e-12
            assert abs(np.linalg.det(M) - 1) < 1e-12
            # canonical form: lower triangular with positive diagonal
            assert abs(M[0, 1]) < 1e-12 and M[0, 0] > 0 and M[1, 1] > 0

    def test_rejects_non_spd(self):
        with pytest.raises(ValueError):
            williamson(np.diag([1.0, -1.0]))
        with pytest.raises(ValueError):
            williamson(np.array([[1.0, 0.5], [0.2, 1.0]]))


class TestBogoliubov:
    def test_identity(self):
        m1, m2 = bogoliubov_params(np.eye(2))
        assert m1 == 1 and m2 == 0

    def test_squeeze(self):
        r = 0.8
        m1, m2 = bogoliubov_params(np.diag([math.exp(r), math.exp(-r)]))
        assert abs(m1 - math.cosh(r)) < 1e-12 and abs(m2 - math.sinh(r)) < 1e-12

    def test_rotation_round_trip(self):
        from gqms.model import identify_real_linear

        theta = 0.4
        rot = np.array(
            [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
        )
        m1, m2 = bogoliubov_params(rot)
        assert abs(m1 - complex(math.cos(theta), math.sin(theta))) < 1e-12
        assert abs(m2) < 1e-12
        assert np.allclose(identify_real_linear(m1, m2), rot, atol=1e-12)

    def test_ccr_normalization(self):
        rng = np.random.default_rng(53)
        for _ in range(100):
            A = rng.normal(size=(2, 2))
            if abs(np.linalg.det(A)) < 0.1:
                continue
            M = A / math.sqrt(abs(np.linalg.det(A)))
            if np.linalg.det(M) < 0:
                M = M @ np.diag([1.0, -1.0])
            m1, m2 = bogoliubov_params(M)
            assert abs(abs(m1) ** 2 - abs(m2) ** 2 - 1) < 1e-12

    def test_rejects_non_symplectic(self):
        with pytest.raises(ValueError, match="symplectic"):
            bogoliubov_params(2 * np.eye(2))


class TestConjugatedLadder:
    @staticmethod
    def make_sg(M, omega):
        m1, m2 = bogoliubov_params(M)
        return StationaryGaussian(
            omega=omega, S=np.eye(2), nu=1.0, M=M, m1=m1, m2=m2, beta=1.0
        )

    def test_pure_displacement(self):
        a_t, ad_t = conjugated_ladder(self.make_sg(np.eye(2), 1.0 + 0j))
        assert (a_t.c_a, a_t.c_ad, a_t.c_id) == (1, 0, -1)
        assert (ad_t.c_a, ad_t.c_ad, ad_t.c_id) == (0, 1, -1)

    def test_pure_squeeze(self):
        r = 0.6
        a_t, _ = conjugated_ladder(self.make_sg(np.diag([math.exp(r), math.exp(-r)]), 0j))
        assert abs(a_t.c_a - math.cosh(r)) < 1e-12
        assert abs(a_t.c_ad + math.sinh(r)) < 1e-12

    def test_ccr_preserved(self):
        rng = np.random.default_rng(54)
        for _ in range(50):
            model = random_valid_model(rng)
            a_t, ad_t = conjugated_ladder(stationary_gaussian(model))
            comm = commutator(a_t.as_poly(), ad_t.as_poly())
            assert comm.isclose(identity(), 1e-10)

    def test_adjoint_pairing(self):
        rng = np.random.default_rng(55)
        from gqms.wick import adjoint

        for _ in range(20):
            model = random_valid_model(rng)
            a_t, ad_t = conjugated_ladder(stationary_gaussian(model))
            assert adjoint(a_t.as_poly()).isclose(ad_t.as_poly(), 1e-12)


class TestStandardizedDrifts:
    def test_diagonal_model(self):
        Z_std, Z_dual = standardized_drifts(M0)
        assert np.allclose(Z_std, drift_matrix(M0), atol=1e-12)
        assert np.allclose(Z_dual, drift_matrix(M0).T, atol=1e-12)

    def test_similarity_invariants(self):
        rng = np.random.default_rng(56)
        for _ in range(100):
            model = random_valid_model(rng)
            Z = drift_matrix(model)
            Z_std, Z_dual = standardized_drifts(model)
            eig = np.sort_complex(np.linalg.eigvals(Z))
            assert np.allclose(np.sort_complex(np.linalg.eigvals(Z_std)), eig, atol=1e-10)
            assert np.allclose(
                np.sort_complex(np.linalg.eigvals(Z_dual)),
                np.sort_complex(np.conj(eig)),
                atol=1e-10,
            )


class TestDiagonalRoundTrip:
    def test_diagonal_models_standardize_to_identity(self):
        rng = np.random.default_rng(57)
        for _ in range(100):
            model = random_diagonal_model(rng)
            sg = stationary_gaussian(model)
            beta = validate(model).beta
            assert abs(sg.omega) < 1e-10
            assert np.allclose(sg.M, np.eye(2), atol=1e-10)
            assert abs(sg.beta - beta) < 1e-12
