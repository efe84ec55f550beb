"""Closed-form eigenvalue lattices and spectral gaps of the induced generator.

The two eigenvalues of the drift matrix (the base eigenvalues lam, mu)
generate every eigenvalue of the induced generator as n*lam + m*mu; the
adjoint generator carries the conjugate lattice, and the symmetrized
operator L* + L carries the analogous real lattice built from its own 2x2
base matrix.  The spectral gap is read off the latter: minus half the base
eigenvalue closest to zero.

When the gap is positive these lattices exhaust the spectrum; without a gap
only the eigenvalues are certified, which :class:`SpectrumPrediction` keeps
track of via ``complete``.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from gqms.generator import GNS, KMS
from gqms.model import gamma_of, require_diagonal, validate

MERGE_TOL = 1e-9
ZERO_TOL = 1e-12


class LatticePoint(NamedTuple):
    value: complex
    n: int
    m: int
    multiplicity: int


@dataclass(frozen=True)
class SpectrumPrediction:
    """Eigenvalue lattice {n lam + m mu} up to a total-degree cutoff.

    Coincident values are merged with summed multiplicity, keeping the
    first (n, m) in degree-major order as the representative.  ``complete``
    records whether the lattice is known to be the whole spectrum (true
    exactly when the gap is positive).
    """

    lam: complex
    mu: complex
    defective: bool
    points: tuple
    complete: bool = True


def base_eigenvalues(model):
    """Closed-form drift eigenvalues (-gamma -/+ sqrt(|kappa|^2 - Omega^2)).

    Returns ``(lam, mu, defective)`` with lam before mu in (real, imag)
    order; ``defective`` flags a genuine Jordan block (coincident pair with
    a non-scalar drift matrix, i.e. |kappa| = |Omega| != 0).
    """
    if not validate(model).invariant_exists:
        raise ValueError(
            "no invariant state: requires gamma > 0 and "
            "gamma^2 + Omega^2 - |kappa|^2 > 0"
        )
    gamma = gamma_of(model)
    root = cmath.sqrt(abs(model.kappa) ** 2 - model.omega**2)
    lam = -gamma - root
    mu = -gamma + root
    defective = abs(lam - mu) <= 1e-9 * (1 + abs(lam)) and abs(model.kappa) > 1e-12
    return lam, mu, defective


def predicted_lattice(lam, mu, defective, max_total_degree):
    """Enumerate the lattice with multiplicities up to the degree cutoff.

    Non-defective: every (n, m) with n + m <= cutoff contributes n lam + m mu.
    Defective: the n + 1 points of total degree n collapse onto n*lam.
    """
    if lam.real >= 0 or mu.real >= 0:
        raise ValueError("base eigenvalues must have negative real part")
    points = []
    if defective:
        raw = [(n * lam, n, 0, n + 1) for n in range(max_total_degree + 1)]
    else:
        raw = [
            (n * lam + m * mu, n, m, 1)
            for d in range(max_total_degree + 1)
            for n in range(d, -1, -1)
            for m in (d - n,)
        ]
    for value, n, m, mult in raw:
        for i, existing in enumerate(points):
            if abs(existing.value - value) <= MERGE_TOL:
                points[i] = existing._replace(
                    multiplicity=existing.multiplicity + mult
                )
                break
        else:
            points.append(LatticePoint(value, n, m, mult))
    return SpectrumPrediction(
        lam=lam, mu=mu, defective=defective, points=tuple(points)
    )


def adjoint_lattice(pred):
    """Lattice of the adjoint generator: complex-conjugate every value."""
    return SpectrumPrediction(
        lam=pred.lam.conjugate(),
        mu=pred.mu.conjugate(),
        defective=pred.defective,
        points=tuple(
            p._replace(value=p.value.conjugate()) for p in pred.points
        ),
        complete=pred.complete,
    )


def sum_base_pair(model, embedding):
    """Base eigenvalues (lam, mu) of L* + L, lam >= mu, both <= 0.

    KMS: -2 gamma +/- 2|kappa|;  GNS: -2 gamma +/- 2 cosh(beta/2) |kappa|.
    """
    report = require_diagonal(model)
    gamma = gamma_of(model)
    if embedding == KMS:
        coupling = abs(model.kappa)
    elif embedding == GNS:
        coupling = math.cosh(report.beta / 2) * abs(model.kappa)
    else:
        raise ValueError(f"unknown embedding {embedding!r}; use {GNS!r} or {KMS!r}")
    return -2 * gamma + 2 * coupling, -2 * gamma - 2 * coupling


def sum_lattice(model, embedding, max_total_degree):
    """Eigenvalue lattice of the symmetrized operator L* + L."""
    lam, mu = sum_base_pair(model, embedding)
    if abs(lam) <= ZERO_TOL and abs(mu) <= ZERO_TOL:
        raise ValueError("both base eigenvalues of L* + L vanish")
    points = []
    for d in range(max_total_degree + 1):
        for n in range(d, -1, -1):
            m = d - n
            value = n * lam + m * mu
            for i, existing in enumerate(points):
                if abs(existing.value - value) <= MERGE_TOL:
                    points[i] = existing._replace(
                        multiplicity=existing.multiplicity + 1
                    )
                    break
            else:
                points.append(LatticePoint(complex(value), n, m, 1))
    zero_simple = lam < -ZERO_TOL
    return SpectrumPrediction(
        lam=complex(lam),
        mu=complex(mu),
        defective=False,
        points=tuple(points),
        complete=zero_simple,
    )


def spectral_gap(model, embedding):
    """Gap of the induced generator: -lam_max / 2 from the sum base pair."""
    lam, _ = sum_base_pair(model, embedding)
    return -lam / 2 if lam < -ZERO_TOL else 0.0


@dataclass(frozen=True)
class GapReport:
    """Spectral gaps for both embeddings with the equivalent spectral flags.

    A positive gap, simplicity of the zero eigenvalue of L* + L, and
    compactness of its resolvent are equivalent, so the flags are derived
    from the same base eigenvalue; gap_kms >= gap_gns always holds.
    """

    gap_kms: float
    gap_gns: float
    zero_simple_kms: bool
    zero_simple_gns: bool
    compact_resolvent_kms: bool
    compact_resolvent_gns: bool


def gap_report(model):
    gaps = {}
    simple = {}
    for embedding in (KMS, GNS):
        simple[embedding] = sum_base_pair(model, embedding)[0] < -ZERO_TOL
        gaps[embedding] = spectral_gap(model, embedding)
    for embedding in (KMS, GNS):
        assert (gaps[embedding] > 0) == simple[embedding]
    assert gaps[KMS] >= gaps[GNS] - 1e-12
    return GapReport(
        gap_kms=gaps[KMS],
        gap_gns=gaps[GNS],
        zero_simple_kms=simple[KMS],
        zero_simple_gns=simple[GNS],
        compact_resolvent_kms=simple[KMS],
        compact_resolvent_gns=simple[GNS],
    )
