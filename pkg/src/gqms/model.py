"""Model parameters and admissibility checks for one-mode Gaussian GKSL dynamics.

A :class:`GaussianModel` packs the Hamiltonian parameters (Omega, kappa,
zeta) and the noise pairs (v_l, u_l) defining L_l = conj(v_l) a + u_l a†.
This module derives the associated 2x2 real drift and diffusion matrices,
decides whether a unique invariant state exists, whether it is the faithful
thermal state diagonal in the number basis, and builds the dual model whose
drift matrix is the transpose.

Real-linear maps on C are identified with real 2x2 matrices acting on
(Re z, Im z); see :func:`identify_real_linear`.
"""

import math
from dataclasses import dataclass

import numpy as np

DIAGONAL_TOL = 1e-10


@dataclass(frozen=True)
class GaussianModel:
    """Parameters (Omega, kappa, zeta, {(v_l, u_l)}) of the generator."""

    omega: float
    kappa: complex
    zeta: complex
    kraus: tuple

    def __post_init__(self):
        pairs = tuple((complex(v), complex(u)) for v, u in self.kraus)
        if not pairs:
            raise ValueError("at least one noise pair (v, u) is required")
        values = [self.omega, self.kappa, self.zeta]
        values.extend(z for pair in pairs for z in pair)
        if not all(math.isfinite(abs(complex(z))) for z in values):
            raise ValueError("model parameters must be finite")
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "kappa", complex(self.kappa))
        object.__setattr__(self, "zeta", complex(self.zeta))
        object.__setattr__(self, "kraus", pairs)


@dataclass(frozen=True)
class ModelReport:
    """Findings of :func:`validate`; beta may be +/-inf for non-thermal noise."""

    gamma: float
    beta: float
    invariant_exists: bool
    faithful_thermal: bool
    diagonal: bool
    stable: bool


def gamma_of(model):
    """Net damping rate: half the excess of loss over gain rates."""
    return 0.5 * sum(abs(v) ** 2 - abs(u) ** 2 for v, u in model.kraus)


def beta_of(model):
    """Inverse temperature -log(sum |u|^2 / sum |v|^2); +/-inf at the ends."""
    su = sum(abs(u) ** 2 for _, u in model.kraus)
    sv = sum(abs(v) ** 2 for v, _ in model.kraus)
    if su == 0.0:
        return math.inf
    if sv == 0.0:
        return -math.inf
    return -math.log(su / sv)


def validate(model):
    """Compute rates and classify the model; never raises."""
    gamma = gamma_of(model)
    beta = beta_of(model)
    invariant_exists = gamma > 0 and gamma**2 + model.omega**2 - abs(model.kappa) ** 2 > 0
    faithful = math.isfinite(beta) and beta > 0
    uv = sum(u * v for v, u in model.kraus)
    tanh_half = math.tanh(beta / 2) if math.isfinite(beta) else 1.0
    kappa_target = 1j * tanh_half * uv
    diagonal = (
        abs(model.zeta) <= DIAGONAL_TOL
        and abs(model.kappa - kappa_target) <= DIAGONAL_TOL * (1 + abs(model.kappa))
    )
    eigs = np.linalg.eigvals(drift_matrix(model))
    stable = bool(np.all(eigs.real < 0))
    return ModelReport(
        gamma=gamma,
        beta=beta,
        invariant_exists=invariant_exists,
        faithful_thermal=faithful,
        diagonal=diagonal,
        stable=stable,
    )


def require_diagonal(model):
    """Validate and insist on a faithful thermal invariant state.

    Returns the report; raises ValueError for models whose invariant state
    is missing, non-faithful, or not diagonal in the number basis (the
    latter are handled by the standardization layer first).
    """
    report = validate(model)
    if not report.invariant_exists:
        raise ValueError(
            "no invariant state: requires gamma > 0 and "
            "gamma^2 + Omega^2 - |kappa|^2 > 0 "
            f"(gamma={report.gamma:.6g})"
        )
    if not report.faithful_thermal:
        raise ValueError("invariant state is not faithful (beta is not finite positive)")
    if not report.diagonal:
        raise ValueError(
            "invariant state is not diagonal in the number basis; standardize first"
        )
    return report


def identify_real_linear(s1, s2):
    """2x2 real matrix of the real-linear map z -> s1 z + s2 conj(z)."""
    s1 = complex(s1)
    s2 = complex(s2)
    return np.array(
        [
            [s1.real + s2.real, s2.imag - s1.imag],
            [s1.imag + s2.imag, s1.real - s2.real],
        ]
    )


def real_linear_components(S):
    """Inverse of :func:`identify_real_linear`: recover (s1, s2) from the matrix."""
    S1 = S[0, 0] + 1j * S[1, 0]
    Si = S[0, 1] + 1j * S[1, 1]
    return (S1 - 1j * Si) / 2, (S1 + 1j * Si) / 2


def drift_matrix(model):
    """The 2x2 real drift matrix steering Weyl-operator arguments."""
    gamma = gamma_of(model)
    k = model.kappa
    return np.array(
        [
            [-gamma - k.imag, k.real - model.omega],
            [k.real + model.omega, -gamma + k.imag],
        ]
    )


def diffusion_matrix(model):
    """Identification of the diffusion map z -> c1 z + c2 conj(z).

    c1 = sum(|u|^2 + |v|^2) and c2 = 2 sum(v u) over the noise pairs.
    """
    c1 = sum(abs(u) ** 2 + abs(v) ** 2 for v, u in model.kraus)
    c2 = 2 * sum(v * u for v, u in model.kraus)
    return identify_real_linear(c1, c2)


def dual_model(model):
    """The model generating the dual dynamics (drift matrix transposed).

    Omega flips sign, kappa is unchanged, and each noise pair (v, u) maps to
    (e^{beta/2} u, e^{-beta/2} v); the damping rate gamma is preserved.
    """
    report = require_diagonal(model)
    half = report.beta / 2
    pairs = tuple(
        (math.exp(half) * u, math.exp(-half) * v) for v, u in model.kraus
    )
    return GaussianModel(omega=-model.omega, kappa=model.kappa, zeta=0j, kraus=pairs)


def random_model(rng, max_pairs=3):
    """Unconstrained random draw; may fail every admissibility check."""
    n_pairs = int(rng.integers(1, max_pairs + 1))
    kraus = tuple(
        (
            complex(rng.normal(), rng.normal()),
            complex(0.6 * rng.normal(), 0.6 * rng.normal()),
        )
        for _ in range(n_pairs)
    )
    return GaussianModel(
        omega=float(rng.normal()),
        kappa=complex(0.5 * rng.normal(), 0.5 * rng.normal()),
        zeta=complex(rng.normal(), rng.normal()),
        kraus=kraus,
    )


def random_valid_model(rng, max_pairs=3, with_gain=True):
    """Rejection-sample a model with a unique invariant state.

    ``with_gain`` keeps at least one u_l away from zero so the invariant
    state is faithful (needed by the standardization sweeps).
    """
    for _ in range(1000):
        model = random_model(rng, max_pairs=max_pairs)
        if with_gain and sum(abs(u) ** 2 for _, u in model.kraus) < 1e-3:
            continue
        if validate(model).invariant_exists:
            return model
    raise RuntimeError("failed to sample a valid model")


def random_diagonal_model(rng, max_pairs=3):
    """Random model whose invariant state is the faithful thermal diagonal one.

    Noise pairs are drawn with net damping, then kappa is matched to the
    diagonal-state condition; draws violating the drift-stability inequality
    are rejected.
    """
    for _ in range(1000):
        n_pairs = int(rng.integers(1, max_pairs + 1))
        kraus = []
        for _ in range(n_pairs):
            v = complex(rng.normal(), rng.normal())
            u = complex(0.5 * rng.normal(), 0.5 * rng.normal())
            kraus.append((v, u))
        su = sum(abs(u) ** 2 for _, u in kraus)
        sv = sum(abs(v) ** 2 for v, _ in kraus)
        if su < 1e-3 or sv <= su:
            continue
        beta = -math.log(su / sv)
        uv = sum(u * v for v, u in kraus)
        kappa = 1j * math.tanh(beta / 2) * uv
        model = GaussianModel(
            omega=float(rng.normal()), kappa=kappa, zeta=0j, kraus=tuple(kraus)
        )
        report = validate(model)
        if report.invariant_exists and report.diagonal and report.faithful_thermal:
            return model
    raise RuntimeError("failed to sample a diagonal model")
