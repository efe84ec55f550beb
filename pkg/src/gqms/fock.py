"""Truncated-Fock numerics: an independent check on the symbolic route.

Ladder operators are cut off at ``n_max`` levels, superoperators act on
column-stacked vectorizations, and the induced generator is realized by a
diagonal similarity with the embedding weights rho^{s/2}(j) rho^{(1-s)/2}(k)
(exact in finite dimension because the invariant state is diagonal).

Truncation manufactures spurious boundary modes, so eigenpairs are filtered
by the squared mass of their eigen-matrix in the last two Fock rows/columns.
One caveat learned the hard way: under finite-time evolution the edge defect
propagates inward roughly one level per coupling time, so time-dependent
residuals (:func:`verify_weyl_action`) are measured on the half-cutoff block
rather than on everything but the edge.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.linalg import expm
from scipy.sparse.linalg import expm_multiply

from gqms.generator import GNS, KMS, hamiltonian_poly, kraus_polys
from gqms.model import (
    diffusion_matrix,
    drift_matrix,
    dual_model,
    require_diagonal,
    validate,
)

EDGE_MASS_TOL = 1e-6
MAX_DIM = 4096  # dense eigensolver bound: n_max <= 64


@dataclass(frozen=True)
class TruncatedRep:
    """Ladder matrices and thermal weights on the first n_max Fock levels."""

    n_max: int
    beta: float
    a_mat: np.ndarray
    ad_mat: np.ndarray

    def rho_pow(self, s):
        """Diagonal matrix of rho^s, not renormalized after truncation."""
        levels = np.arange(self.n_max)
        weights = (1 - math.exp(-self.beta)) ** s * np.exp(-self.beta * s * levels)
        return np.diag(weights).astype(complex)

    def embedding_weights(self, s):
        """Vectorized weights of V -> rho^{s/2} V rho^{(1-s)/2} (column-stacked)."""
        levels = np.arange(self.n_max)
        row = np.exp(-self.beta * s * levels / 2)
        col = np.exp(-self.beta * (1 - s) * levels / 2)
        scale = (1 - math.exp(-self.beta)) ** 0.5
        return scale * np.kron(col, row)


@dataclass(frozen=True)
class SuperOp:
    """Dense matrix acting on column-stacked n_max x n_max matrices."""

    matrix: np.ndarray
    n_max: int

    @property
    def dim(self):
        return self.n_max**2


def vec(V):
    return np.asarray(V).reshape(-1, order="F")


def unvec(v, n_max):
    return np.asarray(v).reshape((n_max, n_max), order="F")


def build_rep(model, n_max):
    """Truncated representation for a model with a faithful diagonal state."""
    report = require_diagonal(model)
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    if n_max**2 > MAX_DIM:
        raise ValueError(f"n_max={n_max} exceeds the dense-path bound of 64")
    a = np.diag(np.sqrt(np.arange(1, n_max)), 1).astype(complex)
    return TruncatedRep(n_max=n_max, beta=report.beta, a_mat=a, ad_mat=a.conj().T)


def materialize(rep, p):
    """Matrix of a normal-ordered polynomial: sum c * ad^n a^m.

    Entries are exact wherever the result's row index stays below the
    cutoff, because lowering is applied before raising.
    """
    n_max = rep.n_max
    out = np.zeros((n_max, n_max), dtype=complex)
    pow_a = {}
    pow_ad = {}

    def power(mat, k, cache):
        if k not in cache:
            cache[k] = np.linalg.matrix_power(mat, k)
        return cache[k]

    for (n, m), c in p.terms.items():
        out += c * power(rep.ad_mat, n, pow_ad) @ power(rep.a_mat, m, pow_a)
    return out


def _model_matrices(rep, model):
    H = materialize(rep, hamiltonian_poly(model))
    Ls = [materialize(rep, L) for L in kraus_polys(model)]
    return H, Ls


def gksl_superop(rep, model):
    """Heisenberg generator V -> i[H,V] - 1/2 sum(L*L V - 2 L* V L + V L*L)."""
    n = rep.n_max
    I = np.eye(n, dtype=complex)
    H, Ls = _model_matrices(rep, model)
    S = 1j * (np.kron(I, H) - np.kron(H.T, I))
    for L in Ls:
        Ld = L.conj().T
        LdL = Ld @ L
        S -= 0.5 * (np.kron(I, LdL) + np.kron(LdL.T, I) - 2 * np.kron(L.T, Ld))
    return SuperOp(matrix=S, n_max=n)


def predual_superop(rep, model):
    """Schroedinger generator V -> -i[H,V] - 1/2 sum(L*L V - 2 L V L* + V L*L)."""
    n = rep.n_max
    I = np.eye(n, dtype=complex)
    H, Ls = _model_matrices(rep, model)
    S = -1j * (np.kron(I, H) - np.kron(H.T, I))
    for L in Ls:
        Ld = L.conj().T
        LdL = Ld @ L
        S -= 0.5 * (np.kron(I, LdL) + np.kron(LdL.T, I) - 2 * np.kron(L.conj(), L))
    return SuperOp(matrix=S, n_max=n)


def induced_superop(rep, model, s):
    """Generator induced on Hilbert-Schmidt space by the s-embedding.

    Conjugation of the Heisenberg generator by the (diagonal, invertible)
    embedding V -> rho^{s/2} V rho^{(1-s)/2}; entries stay bounded because
    the generator only couples neighbouring weights.
    """
    if not 0 <= s <= 1:
        raise ValueError("embedding parameter s must lie in [0, 1]")
    S = gksl_superop(rep, model).matrix
    d = rep.embedding_weights(s)
    return SuperOp(matrix=(d[:, None] * S) / d[None, :], n_max=rep.n_max)


def adjoint_superop(rep, model, s):
    """Hilbert-Schmidt adjoint of the induced generator via the dual model.

    The adjoint semigroup is the induced semigroup of the dual dynamics with
    embedding parameter 1 - s; in finite truncation this equals the
    conjugate-transposed matrix of :func:`induced_superop` to rounding.
    """
    return induced_superop(rep, dual_model(model), 1 - s)


def symmetrized_superop(rep, model, embedding):
    """L* + L for the GNS (s=0) or KMS (s=1/2) embedding."""
    s = {GNS: 0.0, KMS: 0.5}[embedding]
    K = induced_superop(rep, model, s).matrix
    return SuperOp(matrix=K + K.conj().T, n_max=rep.n_max)


def edge_mass(V):
    """Squared mass of a unit-Frobenius matrix in the last two rows/columns."""
    return float(
        np.sum(np.abs(V[-2:, :]) ** 2) + np.sum(np.abs(V[:-2, -2:]) ** 2)
    )


def interior_eigs(sop, edge_mass_tol=EDGE_MASS_TOL):
    """All eigenvalues whose eigen-matrix is concentrated away from the cutoff."""
    w, V = np.linalg.eig(sop.matrix)
    kept = []
    for i in range(len(w)):
        M = unvec(V[:, i], sop.n_max)
        M = M / np.linalg.norm(M)
        if edge_mass(M) < edge_mass_tol:
            kept.append(w[i])
    return np.array(kept)


def numeric_eigs(sop, k, edge_mass_tol=EDGE_MASS_TOL):
    """The k interior eigenvalues of smallest magnitude.

    Sorted by magnitude, then argument; raises when truncation artifacts
    leave fewer than k interior eigenpairs.
    """
    kept = interior_eigs(sop, edge_mass_tol)
    if len(kept) < k:
        raise RuntimeError(
            f"only {len(kept)} interior eigenpairs at edge-mass tolerance "
            f"{edge_mass_tol:g}; increase n_max or loosen the tolerance"
        )
    order = sorted(range(len(kept)), key=lambda i: (abs(kept[i]), np.angle(kept[i])))
    return [kept[i] for i in order[:k]]


def second_sum_eigenvalue(rep, model, embedding, edge_mass_tol=EDGE_MASS_TOL):
    """Largest eigenvalue of L* + L on the complement of the invariant state.

    The invariant direction rho^{1/2} is deflated and eigenvalues are walked
    downward in clusters; within a degenerate cluster the representative is
    the minimum-edge-mass unit vector of its span, so a highly degenerate
    kernel (gapless case) is still recognized as a second zero eigenvalue.
    """
    sym = symmetrized_superop(rep, model, embedding)
    r = vec(rep.rho_pow(0.5))
    r = r / np.linalg.norm(r)
    shift = 10.0 * (1 + np.linalg.norm(sym.matrix, 1))
    deflated = sym.matrix - shift * np.outer(r, r.conj())
    w, V = np.linalg.eigh(deflated)
    n = rep.n_max
    mask = np.zeros(n * n, dtype=bool)
    idx = np.arange(n * n)
    mask |= (idx % n) >= n - 2
    mask |= (idx // n) >= n - 2
    order = np.argsort(w)[::-1]
    i = 0
    cluster_tol = 1e-8 * (1 + abs(w[order[0]]))
    while i < len(order):
        j = i
        while j + 1 < len(order) and abs(w[order[j + 1]] - w[order[i]]) <= cluster_tol:
            j += 1
        cols = V[:, order[i : j + 1]]
        G = cols[mask, :].conj().T @ cols[mask, :]
        min_mass = float(np.linalg.eigvalsh(G)[0]) if G.size else 0.0
        if min_mass < edge_mass_tol:
            return float(np.mean(w[order[i : j + 1]]))
        i = j + 1
    raise RuntimeError("no interior eigenvector found below the invariant state")


def weyl_matrix(rep, z):
    """Truncated Weyl operator exp(z a† - conj(z) a) via scaling-and-squaring."""
    if abs(z) > 1.0:
        raise ValueError("weyl_matrix is restricted to |z| <= 1")
    return expm(z * rep.ad_mat - np.conj(z) * rep.a_mat)


def _expm_2x2(M):
    """Closed-form exponential of a real 2x2 matrix (trace/determinant form)."""
    tau = 0.5 * (M[0, 0] + M[1, 1])
    B = M - tau * np.eye(2)
    q2 = -(B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0])
    q = np.sqrt(complex(q2))
    if abs(q) < 1e-8:
        c = 1.0 + q2 / 2
        s = 1.0 + q2 / 6
    else:
        c = np.cosh(q)
        s = np.sinh(q) / q
    return (np.exp(tau) * (c * np.eye(2) + s * B)).real


def drift_flow(model, t, z):
    """e^{tZ} z through the real-linear identification of the drift matrix."""
    v = _expm_2x2(t * drift_matrix(model)) @ np.array([z.real, z.imag])
    return complex(v[0], v[1])


def phi_t(model, z, t):
    """Scalar factor of the Weyl-operator evolution, by adaptive quadrature.

    phi_t(z) = exp(-1/2 int_0^t Re(conj(w) C w) ds + i int_0^t Re(conj(zeta) w) ds)
    with w(s) = e^{sZ} z; |phi_t| <= 1 for admissible models.
    """
    if not validate(model).invariant_exists:
        raise ValueError("phi_t requires a model with an invariant state")
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return 1.0 + 0j
    c1 = sum(abs(u) ** 2 + abs(v) ** 2 for v, u in model.kraus)
    c2 = 2 * sum(v * u for v, u in model.kraus)
    Z = drift_matrix(model)

    def w(s):
        v = _expm_2x2(s * Z) @ np.array([z.real, z.imag])
        return complex(v[0], v[1])

    def dissipative(s):
        ws = w(s)
        return (np.conj(ws) * (c1 * ws + c2 * np.conj(ws))).real

    def hamiltonian(s):
        return (np.conj(model.zeta) * w(s)).real

    i1, err1 = quad(dissipative, 0.0, t, epsabs=1e-13, epsrel=1e-13, limit=200)
    i2, err2 = quad(hamiltonian, 0.0, t, epsabs=1e-13, epsrel=1e-13, limit=200)
    if max(err1, err2) > 1e-9:
        raise RuntimeError(f"quadrature did not converge (error {max(err1, err2):g})")
    return complex(np.exp(-0.5 * i1 + 1j * i2))


def verify_weyl_action(rep, model, z, t):
    """Residual of T_t(W(z)) = phi_t(z) W(e^{tZ} z) in truncation.

    The left side is the exponential of the Heisenberg superoperator applied
    to the truncated W(z); the difference is measured in operator norm on
    the half-cutoff block, inside which the inward-propagating edge defect
    has not arrived for t <= 2.
    """
    if abs(z) > 0.5:
        raise ValueError("verify_weyl_action is restricted to |z| <= 0.5")
    if t > 2:
        raise ValueError("verify_weyl_action is restricted to t <= 2")
    S = gksl_superop(rep, model).matrix
    evolved = unvec(expm_multiply(t * S, vec(weyl_matrix(rep, z))), rep.n_max)
    predicted = phi_t(model, z, t) * weyl_matrix(rep, drift_flow(model, t, z))
    h = rep.n_max // 2
    return float(np.linalg.norm((evolved - predicted)[:h, :h], 2))


def characteristic_invariance(rep, model, z):
    """Characteristic function of the invariant state vs its closed form.

    Returns ``(lhs, rhs)`` with lhs = Tr(rho W(z)) in truncation and
    rhs = exp(-coth(beta/2) |z|^2 / 2); they differ by the thermal tail
    beyond the cutoff plus exponential rounding.
    """
    if abs(z) > 0.5:
        raise ValueError("characteristic_invariance is restricted to |z| <= 0.5")
    lhs = complex(np.trace(rep.rho_pow(1.0) @ weyl_matrix(rep, z)))
    rhs = complex(np.exp(-abs(z) ** 2 / (2 * math.tanh(rep.beta / 2))))
    return lhs, rhs
