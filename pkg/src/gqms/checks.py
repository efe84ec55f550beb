"""Verification campaign: every cross-check between the two spectral routes.

Each check compares an exact closed form or symbolic identity against an
independent route (dense truncated numerics, random-model property sweeps)
and reports the worst deviation with its tolerance.  Checks are pure
functions of (model, config, seed) so the CLI can fan them out across
workers and still emit deterministic output; random sweeps derive their
generator from GQMS_SEED plus a per-check offset, never from worker order.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from gqms import fock, spectrum
from gqms.generator import (
    GNS,
    KMS,
    apply_dual_generator,
    apply_generator,
    quasi_derivation_closed_form,
    quasi_derivation_residual,
    triangular_representation,
)
from gqms.model import (
    diffusion_matrix,
    drift_matrix,
    random_diagonal_model,
    random_model,
    random_valid_model,
    validate,
)
from gqms.standardize import stationary_gaussian, williamson
from gqms.wick import (
    WickPoly,
    modular_transform,
    monomial,
    multiply,
    thermal_expectation,
)

DEFAULT_SEED = 20250810

DEFAULT_TOLERANCES = {
    "base_eigenvalues": 1e-12,
    "stability_equivalence": 0.0,
    "lattice_law": 1e-10,
    "oracle_equivalence": 1e-10,
    "spectrum_convergence": 1e-4,
    "quasi_derivation": 1e-10,
    "invariance": 1e-10,
    "duality": 1e-10,
    "weyl_action": 1e-6,
    "phi_closed_form": 1e-10,
    "characteristic_invariance": 1e-8,
    "gap_numeric": 1e-4,
    "gap_ordering": 1e-12,
    "adjoint_spectrum": 1e-8,
    "contraction": 1e-8,
    "standardization": 1e-12,
}

# Edge-mass tolerance for the convergence sweep: the 1e-6 production filter
# keeps no eigenpair at all at n_max = 20, so the sweep matches target
# lattice points under a looser filter that is applied uniformly across the
# whole n_max grid.
CONVERGENCE_EDGE_TOL = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool
    detail: str = ""


def campaign_seed():
    return int(os.environ.get("GQMS_SEED", DEFAULT_SEED))


def _result(name, value, tolerances, passed=None, detail=""):
    tol = tolerances.get(name, DEFAULT_TOLERANCES[name])
    if passed is None:
        passed = value <= tol
    return CheckResult(name=name, value=float(value), tolerance=tol, passed=bool(passed), detail=detail)


def random_poly(rng, max_degree=3, n_terms=4):
    terms = {}
    for _ in range(n_terms):
        n = int(rng.integers(0, max_degree + 1))
        m = int(rng.integers(0, max_degree + 1 - n))
        terms[(n, m)] = complex(rng.normal(), rng.normal())
    return WickPoly(terms)


def check_base_eigenvalue_law(model, tolerances, seed, n_models=1000):
    """Closed-form drift eigenvalues against the dense eigensolver."""
    rng = np.random.default_rng(seed + 1)
    worst = 0.0
    models = [model] + [random_valid_model(rng) for _ in range(n_models - 1)]
    for m in models:
        lam, mu, _ = spectrum.base_eigenvalues(m)
        closed = sorted((lam, mu), key=lambda z: (z.real, z.imag))
        dense = sorted(np.linalg.eigvals(drift_matrix(m)), key=lambda z: (z.real, z.imag))
        worst = max(worst, max(abs(c - d) for c, d in zip(closed, dense)))
    return _result("base_eigenvalues", worst, tolerances)


def check_stability_equivalence(tolerances, seed, n_models=1000):
    """Drift stability holds exactly when the invariant-state condition does."""
    rng = np.random.default_rng(seed + 2)
    mismatches = 0
    for _ in range(n_models):
        report = validate(random_model(rng))
        mismatches += report.stable != report.invariant_exists
    return _result(
        "stability_equivalence",
        float(mismatches),
        tolerances,
        detail=f"{n_models} random draws",
    )


def check_lattice_law(model, tolerances, max_degree=5):
    """Triangular-representation diagonal against the closed-form lattice."""
    lam, mu, defective = spectrum.base_eigenvalues(model)
    worst = 0.0
    for s in (0.0, 0.5):
        mat, labels = triangular_representation(model, s, max_degree)
        for i, (n, m) in enumerate(labels):
            target = (n + m) * lam if defective else n * lam + m * mu
            worst = max(worst, abs(mat[i, i] - target))
        lower = np.tril(mat, -1)
        if defective:
            index = {lab: i for i, lab in enumerate(labels)}
            for (n, m) in labels:
                if m >= 1 and (n + 1, m - 1) in index:
                    row, col = index[(n + 1, m - 1)], index[(n, m)]
                    worst = max(worst, abs(mat[row, col] - (-m)))
        worst = max(worst, float(np.abs(lower).max()))
    return _result("lattice_law", worst, tolerances)


def check_oracle_equivalence(model, tolerances, n_max=30, max_degree=3):
    """Symbolic generator against the truncated superoperator on monomials."""
    rep = fock.build_rep(model, n_max)
    S = fock.gksl_superop(rep, model).matrix
    worst = 0.0
    for n in range(max_degree + 1):
        for m in range(max_degree + 1 - n):
            p = monomial(n, m)
            symbolic = fock.materialize(rep, apply_generator(model, p))
            numeric = fock.unvec(S @ fock.vec(fock.materialize(rep, p)), n_max)
            blk = n_max - (n + m) - 2
            worst = max(worst, float(np.abs((symbolic - numeric)[:blk, :blk]).max()))
    return _result("oracle_equivalence", worst, tolerances)


def convergence_errors(model, s, n_grid, max_target_degree=2,
                       edge_mass_tol=CONVERGENCE_EDGE_TOL):
    """Distance of interior eigenvalues to the degree-bounded lattice targets."""
    lam, mu, defective = spectrum.base_eigenvalues(model)
    targets = [
        p.value
        for p in spectrum.predicted_lattice(lam, mu, defective, max_target_degree).points
    ]
    errs = []
    for n_max in n_grid:
        rep = fock.build_rep(model, n_max)
        kept = fock.interior_eigs(fock.induced_superop(rep, model, s), edge_mass_tol)
        if len(kept) == 0:
            errs.append(math.inf)
            continue
        errs.append(max(min(abs(w - t) for w in kept) for t in targets))
    return errs


def check_spectrum_convergence(model, tolerances, s=0.5, n_grid=(20, 30, 40)):
    errs = convergence_errors(model, s, n_grid)
    monotone = all(errs[i + 1] < errs[i] for i in range(len(errs) - 1))
    result = _result("spectrum_convergence", errs[-1], tolerances)
    if not monotone:
        return CheckResult(
            name=result.name,
            value=result.value,
            tolerance=result.tolerance,
            passed=False,
            detail=f"non-monotone errors {errs}",
        )
    return CheckResult(
        name=result.name,
        value=result.value,
        tolerance=result.tolerance,
        passed=result.passed,
        detail=f"errors over n_max {tuple(n_grid)}: " + ", ".join(f"{e:.2e}" for e in errs),
    )


def check_quasi_derivation(model, tolerances, seed, n_cases=200):
    """Leibniz-defect identity on random model/polynomial triples."""
    rng = np.random.default_rng(seed + 3)
    worst = 0.0
    for i in range(n_cases):
        m = model if i == 0 else random_valid_model(rng)
        p = random_poly(rng)
        q = random_poly(rng)
        residual = quasi_derivation_residual(m, p, q)
        closed = quasi_derivation_closed_form(m, p, q)
        diff = residual - closed
        worst = max(worst, max((abs(c) for c in diff.terms.values()), default=0.0))
        if residual.degree > max(p.degree + q.degree, -1):
            worst = math.inf
    return _result("quasi_derivation", worst, tolerances)


def check_invariance(model, tolerances, seed, n_cases=200):
    """Weak stationarity: the invariant state annihilates generator images."""
    rng = np.random.default_rng(seed + 4)
    beta = validate(model).beta
    worst = 0.0
    for _ in range(n_cases):
        p = random_poly(rng)
        worst = max(worst, abs(thermal_expectation(apply_generator(model, p), beta)))
    return _result("invariance", worst, tolerances)


def _weighted_trace(p, q, beta):
    """Tr(rho^{1/2} p rho^{1/2} q) through the modular flow."""
    return thermal_expectation(multiply(modular_transform(p, -0.5, beta), q), beta)


def check_duality(model, tolerances, seed, n_cases=200):
    """Defining duality between the generator and its dual, symbolically."""
    rng = np.random.default_rng(seed + 5)
    beta = validate(model).beta
    worst = 0.0
    for _ in range(n_cases):
        X = random_poly(rng)
        Y = random_poly(rng)
        lhs = _weighted_trace(apply_dual_generator(model, X), Y, beta)
        rhs = _weighted_trace(X, apply_generator(model, Y), beta)
        worst = max(worst, abs(lhs - rhs))
    return _result("duality", worst, tolerances)


def check_weyl_action(model, tolerances, n_max=40, zs=(0.2, 0.3), ts=(0.5, 1.0)):
    rep = fock.build_rep(model, n_max)
    worst = 0.0
    for z in zs:
        for t in ts:
            worst = max(worst, fock.verify_weyl_action(rep, model, z, t))
    return _result("weyl_action", worst, tolerances)


def check_phi_closed_form(model, tolerances, zs=(0.2, 0.3), ts=(0.5, 1.0)):
    """Quadrature against the closed form, for purely damping models.

    Applies when kappa = zeta = 0 and the noise pairs carry no squeezing
    (sum v_l u_l = 0): then phi_t(z) = exp(-(c1/2)|z|^2 (1 - e^{-2 gamma t})
    / (2 gamma)).  Returns None for models outside that family.
    """
    c2 = 2 * sum(v * u for v, u in model.kraus)
    if abs(model.kappa) > 0 or abs(model.zeta) > 0 or abs(c2) > 1e-14:
        return None
    c1 = sum(abs(u) ** 2 + abs(v) ** 2 for v, u in model.kraus)
    gamma = validate(model).gamma
    worst = 0.0
    for z in zs:
        for t in ts:
            closed = math.exp(-(c1 / 2) * abs(z) ** 2 * (1 - math.exp(-2 * gamma * t)) / (2 * gamma))
            worst = max(worst, abs(fock.phi_t(model, z, t) - closed))
    return _result("phi_closed_form", worst, tolerances)


def check_characteristic_invariance(model, tolerances, n_max=40, z=0.3):
    rep = fock.build_rep(model, n_max)
    lhs, rhs = fock.characteristic_invariance(rep, model, z)
    return _result("characteristic_invariance", abs(lhs - rhs), tolerances)


def check_gap_numeric(model, tolerances, n_max=40):
    """Closed-form gaps against the symmetrized superoperator spectrum."""
    rep = fock.build_rep(model, n_max)
    worst = 0.0
    for embedding in (KMS, GNS):
        closed = spectrum.sum_base_pair(model, embedding)[0]
        numeric = fock.second_sum_eigenvalue(rep, model, embedding)
        worst = max(worst, abs(numeric - closed))
        worst = max(worst, abs(spectrum.spectral_gap(model, embedding) - max(-numeric / 2, 0.0)))
    return _result("gap_numeric", worst, tolerances)


def check_gap_ordering(tolerances, seed, n_models=100):
    """KMS gap dominates the GNS gap on random diagonal models."""
    rng = np.random.default_rng(seed + 6)
    worst = 0.0
    for _ in range(n_models):
        m = random_diagonal_model(rng)
        report = spectrum.gap_report(m)
        worst = max(worst, report.gap_gns - report.gap_kms)
    return _result("gap_ordering", max(worst, 0.0), tolerances)


def check_adjoint_spectrum(model, tolerances, n_max=30, k=6):
    """Adjoint superoperator eigenvalues are conjugate to the induced ones.

    The induced side is interior-filtered; the adjoint side is matched over
    its full spectrum, since its eigenvectors carry different edge weights.
    """
    rep = fock.build_rep(model, n_max)
    s = 0.5
    kept = fock.interior_eigs(fock.induced_superop(rep, model, s))
    if len(kept) == 0:
        return _result("adjoint_spectrum", math.inf, tolerances)
    kept = sorted(kept, key=lambda w: (abs(w), np.angle(w)))[:k]
    adjoint_all = np.linalg.eigvals(fock.adjoint_superop(rep, model, s).matrix)
    worst = max(min(abs(a - w.conjugate()) for a in adjoint_all) for w in kept)
    return _result("adjoint_spectrum", worst, tolerances)


def check_contraction(model, tolerances, n_max=24):
    """Interior spectrum of the induced generator stays in the closed left plane."""
    rep = fock.build_rep(model, n_max)
    kept = fock.interior_eigs(fock.induced_superop(rep, model, 0.5))
    value = float(max(w.real for w in kept)) if len(kept) else math.inf
    return _result("contraction", max(value, 0.0), tolerances)


def check_standardization(tolerances, seed, n_models=1000):
    """Stationarity, Williamson, and Bogoliubov invariants on random models."""
    rng = np.random.default_rng(seed + 7)
    worst = 0.0
    for i in range(n_models):
        m = random_valid_model(rng) if i % 2 == 0 else random_diagonal_model(rng)
        sg = stationary_gaussian(m)
        Z, C = drift_matrix(m), diffusion_matrix(m)
        worst = max(worst, float(np.linalg.norm(Z.T @ sg.S + sg.S @ Z + C)))
        nu, M = williamson(sg.S)
        G = np.linalg.inv(M)
        worst = max(worst, float(np.linalg.norm(G.T @ np.diag([nu, nu]) @ G - sg.S)))
        worst = max(worst, abs(float(np.linalg.det(M)) - 1.0))
        worst = max(worst, abs(abs(sg.m1) ** 2 - abs(sg.m2) ** 2 - 1.0))
        if i % 2 == 1:
            # diagonal models must round-trip to the identity standardization
            beta = validate(m).beta
            worst = max(worst, abs(sg.omega))
            worst = max(worst, float(np.abs(sg.M - np.eye(2)).max()))
            worst = max(worst, abs(sg.beta - beta))
    return _result("standardization", worst, tolerances)


def campaign_checks(model, tolerances=None, n_max=40, max_degree=5, seed=None):
    """Check thunks for one diagonally-valid model, in reporting order."""
    tolerances = dict(tolerances or {})
    seed = campaign_seed() if seed is None else seed
    grid = tuple(sorted({max(8, n_max - 20), max(8, n_max - 10), n_max}))
    checks = [
        lambda: check_base_eigenvalue_law(model, tolerances, seed),
        lambda: check_stability_equivalence(tolerances, seed),
        lambda: check_lattice_law(model, tolerances, max_degree),
        lambda: check_oracle_equivalence(model, tolerances, min(30, n_max)),
        lambda: check_spectrum_convergence(model, tolerances, n_grid=grid),
        lambda: check_quasi_derivation(model, tolerances, seed),
        lambda: check_invariance(model, tolerances, seed),
        lambda: check_duality(model, tolerances, seed),
        lambda: check_weyl_action(model, tolerances, n_max),
        lambda: check_phi_closed_form(model, tolerances),
        lambda: check_characteristic_invariance(model, tolerances, n_max),
        lambda: check_gap_numeric(model, tolerances, n_max),
        lambda: check_gap_ordering(tolerances, seed),
        lambda: check_adjoint_spectrum(model, tolerances, min(30, n_max)),
        lambda: check_contraction(model, tolerances, min(24, n_max)),
        lambda: check_standardization(tolerances, seed),
    ]
    return checks


def run_campaign(model, tolerances=None, n_max=40, max_degree=5, seed=None,
                 workers=1):
    """Evaluate the full campaign, optionally fanning out across threads.

    Returns :class:`CheckResult` values in declaration order; checks that do
    not apply to the model (the closed-form scalar factor needs a purely
    damping model) are dropped.
    """
    thunks = campaign_checks(model, tolerances, n_max, max_degree, seed)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda f: f(), thunks))
    else:
        results = [f() for f in thunks]
    return [r for r in results if r is not None]
