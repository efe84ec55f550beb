"""Spectral analysis of one-mode Gaussian quantum Markov semigroups.

Two independent routes to the same spectra: exact symbolic algebra of
normal-ordered ladder polynomials (:mod:`gqms.wick`, :mod:`gqms.generator`,
:mod:`gqms.spectrum`) and dense numerics on a truncated Fock space
(:mod:`gqms.fock`).  :mod:`gqms.standardize` reduces models with
non-diagonal invariant states to the diagonal case, and :mod:`gqms.cli`
wires everything into a command-line verification campaign.
"""

from gqms._kernels import BACKEND as KERNEL_BACKEND
from gqms.generator import (
    GNS,
    KMS,
    apply_dual_generator,
    apply_generator,
    base_matrices,
    quasi_derivation_residual,
    sum_action,
    triangular_representation,
)
from gqms.model import (
    GaussianModel,
    ModelReport,
    diffusion_matrix,
    drift_matrix,
    dual_model,
    identify_real_linear,
    validate,
)
from gqms.spectrum import (
    GapReport,
    SpectrumPrediction,
    adjoint_lattice,
    base_eigenvalues,
    gap_report,
    predicted_lattice,
    spectral_gap,
    sum_lattice,
)
from gqms.wick import (
    FirstOrderPoly,
    LadderWord,
    WickPoly,
    adjoint,
    commutator,
    modular_transform,
    multiply,
    rebase_to_xy,
    thermal_expectation,
    wick_normal_order,
)

__version__ = "0.1.0"

__all__ = [
    "GNS",
    "KMS",
    "KERNEL_BACKEND",
    "FirstOrderPoly",
    "GapReport",
    "GaussianModel",
    "LadderWord",
    "ModelReport",
    "SpectrumPrediction",
    "WickPoly",
    "adjoint",
    "adjoint_lattice",
    "apply_dual_generator",
    "apply_generator",
    "base_eigenvalues",
    "base_matrices",
    "commutator",
    "diffusion_matrix",
    "drift_matrix",
    "dual_model",
    "gap_report",
    "identify_real_linear",
    "modular_transform",
    "multiply",
    "predicted_lattice",
    "quasi_derivation_residual",
    "rebase_to_xy",
    "spectral_gap",
    "sum_action",
    "sum_lattice",
    "thermal_expectation",
    "triangular_representation",
    "validate",
    "wick_normal_order",
]
