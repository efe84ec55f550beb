"""Stationary Gaussian state and standardization of non-diagonal models.

A valid model owns a unique Gaussian invariant state with mean vector omega
and covariance matrix S determined by the linear system zeta = Z^T omega and
the Lyapunov equation Z^T S + S Z + C = 0.  Williamson-diagonalizing S gives
the symplectic factor M and the thermal parameter nu = coth(beta/2) (nu = 1
marks a pure, non-faithful state), and M yields the Bogoliubov pair
(m1, m2) with |m1|^2 - |m2|^2 = 1 that conjugates the ladder operators.

Conjugating the dynamics with the displacement-Bogoliubov unitary produces a
standardized model with drift M^{-1} Z M and a diagonal invariant state, and
the dual dynamics of the original model has drift M M^T Z^T (M M^T)^{-1};
both are similar to Z resp. Z^T, so the spectrum results carry over to
non-diagonal invariant states unchanged.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_continuous_lyapunov

from gqms.model import diffusion_matrix, drift_matrix, validate
from gqms.wick import FirstOrderPoly

SYMPLECTIC_TOL = 1e-10


@dataclass(frozen=True)
class StationaryGaussian:
    """Invariant-state data: mean, covariance, Williamson and Bogoliubov parts.

    ``beta`` is +inf when the state is pure (nu = 1), in which case the
    spectral modules downstream refuse the model.
    """

    omega: complex
    S: np.ndarray
    nu: float
    M: np.ndarray
    m1: complex
    m2: complex
    beta: float


def williamson(S):
    """Symplectic diagonalization S = G^T diag(nu, nu) G of a 2x2 SPD matrix.

    Returns ``(nu, M)`` with nu = sqrt(det S) and M = G^{-1} chosen
    lower-triangular with positive diagonal (any 2x2 matrix of determinant
    one is symplectic, so this Cholesky-like form fixes the phase freedom).
    """
    S = np.asarray(S, dtype=float)
    if np.max(np.abs(S - S.T)) > 1e-10 * (1 + np.max(np.abs(S))):
        raise ValueError("covariance matrix must be symmetric")
    if np.any(np.linalg.eigvalsh(S) <= 0):
        raise ValueError("covariance matrix must be positive definite")
    nu = math.sqrt(float(np.linalg.det(S)))
    # P is the SPD square root of S/nu (determinant one); B = P^{-1} is
    # symmetric, so its QR transposes into the lower-triangular factor.
    vals, vecs = np.linalg.eigh(S / nu)
    P = (vecs * np.sqrt(vals)) @ vecs.T
    B = np.linalg.inv(P)
    Q, R = np.linalg.qr(B)
    L = R.T
    signs = np.sign(np.diag(L))
    M = L * signs[None, :]
    return nu, M


def bogoliubov_params(M):
    """Components (m1, m2) of the real-linear map z -> m1 z + m2 conj(z).

    Requires M symplectic (det 1 in the 2x2 case); the CCR normalization
    |m1|^2 - |m2|^2 = 1 is then automatic.
    """
    M = np.asarray(M, dtype=float)
    if abs(np.linalg.det(M) - 1.0) > SYMPLECTIC_TOL:
        raise ValueError("matrix is not symplectic (determinant differs from 1)")
    M1 = M[0, 0] + 1j * M[1, 0]
    Mi = M[0, 1] + 1j * M[1, 1]
    return (M1 - 1j * Mi) / 2, (M1 + 1j * Mi) / 2


def stationary_gaussian(model):
    """Solve the stationarity equations and decompose the invariant state."""
    if not validate(model).invariant_exists:
        raise ValueError(
            "no invariant state: requires gamma > 0 and "
            "gamma^2 + Omega^2 - |kappa|^2 > 0"
        )
    Z = drift_matrix(model)
    C = diffusion_matrix(model)
    zeta_vec = np.array([model.zeta.real, model.zeta.imag])
    omega_vec = np.linalg.solve(Z.T, zeta_vec)
    S = solve_continuous_lyapunov(Z.T, -C)
    S = (S + S.T) / 2
    residual = np.linalg.norm(Z.T @ S + S @ Z + C)
    if residual > 1e-8 * (1 + np.linalg.norm(C)):
        raise RuntimeError(f"Lyapunov system is near-singular (residual {residual:g})")
    nu, M = williamson(S)
    m1, m2 = bogoliubov_params(M)
    if nu > 1 + 1e-10:
        beta = math.log((nu + 1) / (nu - 1))
    else:
        beta = math.inf
    return StationaryGaussian(
        omega=complex(omega_vec[0], omega_vec[1]),
        S=S,
        nu=nu,
        M=M,
        m1=m1,
        m2=m2,
        beta=beta,
    )


def conjugated_ladder(sg):
    """Ladder operators conjugated by the displacement-Bogoliubov unitary.

    Returns first-order polynomials (a_tilde, ad_tilde) with
    a_tilde = conj(m1) a - m2 a† + (m2 conj(omega) - conj(m1) omega); their
    commutator is the identity and ad_tilde is the adjoint of a_tilde.
    """
    m1, m2, omega = sg.m1, sg.m2, sg.omega
    a_tilde = FirstOrderPoly(
        c_a=m1.conjugate(),
        c_ad=-m2,
        c_id=m2 * omega.conjugate() - m1.conjugate() * omega,
    )
    ad_tilde = FirstOrderPoly(
        c_a=-m2.conjugate(),
        c_ad=m1,
        c_id=m2.conjugate() * omega - m1 * omega.conjugate(),
    )
    return a_tilde, ad_tilde


def standardized_drifts(model):
    """Drift matrices after standardization and of the dual dynamics.

    ``Z_std = M^{-1} Z M`` generates the conjugated dynamics with a diagonal
    invariant state; ``Z_dual = M M^T Z^T (M M^T)^{-1}`` generates the dual,
    so its eigenvalues are the conjugates of those of Z.
    """
    sg = stationary_gaussian(model)
    Z = drift_matrix(model)
    Minv = np.linalg.inv(sg.M)
    T = sg.M @ sg.M.T
    return Minv @ Z @ sg.M, T @ Z.T @ np.linalg.inv(T)
