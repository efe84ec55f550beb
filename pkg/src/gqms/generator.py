"""Symbolic action of the GKSL generator and its induced relatives.

The generator L(X) = i[H, X] - 1/2 sum([X, L_l*] L_l - L_l* [X, L_l]) maps
polynomials in a, a† to polynomials of no larger degree, and its action on
operators embedded as rho^{s/2} X rho^{(1-s)/2} coincides with the embedded
action of L.  This module evaluates L and the dual generator exactly on
:class:`~gqms.wick.WickPoly` values, exposes the symmetrized actions for the
GNS (s=0) and KMS (s=1/2) embeddings, and assembles the triangular matrix of
the induced generator on the product basis built from the two first-order
eigenvectors.
"""

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from gqms.model import gamma_of, require_diagonal
from gqms.wick import (
    FirstOrderPoly,
    WickPoly,
    adjoint,
    annihilator,
    commutator,
    creator,
    degree_ordered_keys,
    identity,
    modular_transform,
    multiply,
    xy_basis_matrix,
)

GNS = "gns"
KMS = "kms"

# Eigenvalue-coincidence and eigenvector-conditioning thresholds for the
# defective-drift detection.
DEFECT_TOL = 1e-9
EIGVEC_COND_LIMIT = 1e8


@lru_cache(maxsize=None)
def hamiltonian_poly(model):
    """H = Omega a†a + (kappa/2) a†^2 + (conj(kappa)/2) a^2 + (zeta/2) a† + h.c."""
    return WickPoly(
        {
            (1, 1): model.omega,
            (2, 0): model.kappa / 2,
            (0, 2): model.kappa.conjugate() / 2,
            (1, 0): model.zeta / 2,
            (0, 1): model.zeta.conjugate() / 2,
        }
    )


@lru_cache(maxsize=None)
def kraus_polys(model):
    """The noise operators L_l = conj(v_l) a + u_l a†."""
    return tuple(
        WickPoly({(0, 1): v.conjugate(), (1, 0): u}) for v, u in model.kraus
    )


def apply_generator(model, p):
    """L(p), exactly normal-ordered; degree never increases."""
    H = hamiltonian_poly(model)
    out = 1j * (multiply(H, p) - multiply(p, H))
    for L in kraus_polys(model):
        Ld = adjoint(L)
        out = out - 0.5 * (
            multiply(commutator(p, Ld), L) - multiply(Ld, commutator(p, L))
        )
    return out


def apply_dual_generator(model, p):
    """Generator of the dual dynamics, evaluated through the dual model."""
    from gqms.model import dual_model

    return apply_generator(dual_model(model), p)


def quasi_derivation_residual(model, p, q):
    """L(pq) - p L(q) - L(p) q, the defect of the Leibniz rule.

    Equals sum_l [p, L_l*][L_l, q] and therefore has degree at most
    deg(p) + deg(q).
    """
    pq = multiply(p, q)
    return (
        apply_generator(model, pq)
        - multiply(p, apply_generator(model, q))
        - multiply(apply_generator(model, p), q)
    )


def quasi_derivation_closed_form(model, p, q):
    """The independent expression sum_l [p, L_l*][L_l, q] for cross-checks."""
    out = WickPoly()
    for L in kraus_polys(model):
        out = out + multiply(commutator(p, adjoint(L)), commutator(L, q))
    return out


def sum_action(model, embedding, p):
    """Symbolic action of the symmetrized induced generator L* + L.

    For the KMS embedding (s=1/2) the result X satisfies
    (L* + L)(rho^{1/4} p rho^{1/4}) = rho^{1/4} X rho^{1/4} and is simply the
    sum of the generator and its dual.  For the GNS embedding (s=0) it
    satisfies (L* + L)(p rho^{1/2}) = X rho^{1/2}, with the right factor
    rho L_l* rho^{-1/2} realized through the modular flow.
    """
    report = require_diagonal(model)
    if embedding == KMS:
        return apply_generator(model, p) + apply_dual_generator(model, p)
    if embedding == GNS:
        out = WickPoly()
        for L in kraus_polys(model):
            Ld = adjoint(L)
            out = out + multiply(Ld, commutator(p, L))
            out = out + multiply(
                commutator(L, p), modular_transform(Ld, 1.0, report.beta)
            )
        return out
    raise ValueError(f"unknown embedding {embedding!r}; use {GNS!r} or {KMS!r}")


@dataclass(frozen=True)
class BaseMatrices:
    """2x2 restrictions to the span of the embedded first-order polynomials.

    ``l_base`` represents the induced generator in the (a, a†) coordinates;
    the sum matrices represent L* + L in the orthonormal bases of the KMS
    and GNS embeddings and are Hermitian with non-positive eigenvalues.
    """

    l_base: np.ndarray
    sum_base_kms: np.ndarray
    sum_base_gns: np.ndarray


def _first_order_image(model, p):
    image = apply_generator(model, p)
    if image.degree > 1 or abs(image.coeff(0, 0)) > 1e-12:
        raise AssertionError("generator did not preserve the first-order span")
    return image.coeff(0, 1), image.coeff(1, 0)


def base_matrices(model, s):
    """Base 2x2 matrices for embedding parameter s in [0, 1]."""
    report = require_diagonal(model)
    if not 0 <= s <= 1:
        raise ValueError("embedding parameter s must lie in [0, 1]")
    la = _first_order_image(model, annihilator())
    lad = _first_order_image(model, creator())
    # columns are the images of a and a† in the (a, a†) coordinates;
    # identical for every s.
    l_base = np.array([[la[0], lad[0]], [la[1], lad[1]]])
    gamma = gamma_of(model)
    k = model.kappa
    sum_kms = np.array(
        [
            [-2 * gamma, 2j * k.conjugate()],
            [-2j * k, -2 * gamma],
        ]
    )
    ch = np.cosh(report.beta / 2)
    sum_gns = np.array(
        [
            [-2 * gamma, 2 * ch * 1j * k.conjugate()],
            [-2 * ch * 1j * k, -2 * gamma],
        ]
    )
    return BaseMatrices(l_base=l_base, sum_base_kms=sum_kms, sum_base_gns=sum_gns)


def _normalize_leading(vec):
    """Unit leading coefficient on the dominant component, ties toward a†."""
    c_a, c_ad = vec
    if abs(c_ad) >= abs(c_a):
        return c_a / c_ad, 1.0 + 0j
    return 1.0 + 0j, c_ad / c_a


def xy_pair(model, s=0.5):
    """Base eigenvalues and the first-order pair (X, Y) spanning them.

    The eigenvalue pair -gamma -/+ sqrt(|kappa|^2 - Omega^2) is evaluated in
    closed form (a dense eigensolver splits an exact Jordan pair by about
    sqrt(machine epsilon), too much for the coincidence test); eigenvectors
    come from the 2x2 base matrix.  Non-defective drift: X, Y are the
    eigenvectors for (lam, mu) in (real, imaginary) order.  Defective drift:
    X is the eigenvector and Y the generalized eigenvector normalized so the
    induced action on Y is lam*Y - X.  Returns (lam, mu, X, Y, defective).
    """
    B = base_matrices(model, s)
    M = B.l_base
    gamma = gamma_of(model)
    root = cmath.sqrt(abs(model.kappa) ** 2 - model.omega**2)
    lam = -gamma - root
    mu = -gamma + root
    coincident = abs(lam - mu) <= DEFECT_TOL * (1 + abs(lam))
    scalar = np.max(np.abs(M - lam * np.eye(2))) <= DEFECT_TOL * (1 + abs(lam))
    if coincident and not scalar:
        # Jordan block: eigenvector from the null space of (M - lam), then
        # the minimal-norm generalized eigenvector with (M - lam) y = -x.
        lam = mu = (lam + mu) / 2
        A = M - lam * np.eye(2)
        _, _, vh = np.linalg.svd(A)
        x = _normalize_leading(vh[-1].conj())
        y = np.linalg.lstsq(A, -np.array(x), rcond=None)[0]
        X = FirstOrderPoly(c_a=x[0], c_ad=x[1])
        Y = FirstOrderPoly(c_a=y[0], c_ad=y[1])
        return lam, mu, X, Y, True
    if coincident and scalar:
        # Diagonalizable double eigenvalue (kappa = 0, Omega = 0).
        return lam, mu, FirstOrderPoly(0j, 1 + 0j), FirstOrderPoly(1 + 0j, 0j), False
    eigvals, eigvecs = np.linalg.eig(M)
    if np.linalg.cond(eigvecs) > EIGVEC_COND_LIMIT:
        raise RuntimeError("base eigenvectors are numerically degenerate")
    straight = abs(eigvals[0] - lam) + abs(eigvals[1] - mu)
    crossed = abs(eigvals[0] - mu) + abs(eigvals[1] - lam)
    order = (0, 1) if straight <= crossed else (1, 0)
    x = _normalize_leading(eigvecs[:, order[0]])
    y = _normalize_leading(eigvecs[:, order[1]])
    X = FirstOrderPoly(c_a=x[0], c_ad=x[1])
    Y = FirstOrderPoly(c_a=y[0], c_ad=y[1])
    return lam, mu, X, Y, False


def triangular_representation(model, s, max_total_degree):
    """Matrix of the induced generator on the ordered basis {X^n Y^m}.

    Returns ``(matrix, labels)`` with labels listing (n, m) degree-major and
    n descending.  The matrix is upper triangular up to rounding: diagonal
    entries are n*lam + m*mu, all other couplings lower the total degree by
    at least two, except the defective case where X^n Y^m additionally feeds
    -m X^{n+1} Y^{m-1} within the same degree block.
    """
    lam, mu, X, Y, defective = xy_pair(model, s)
    A, keys = xy_basis_matrix(X, Y, max_total_degree)
    index = {key: i for i, key in enumerate(keys)}
    xp, yp = X.as_poly(), Y.as_poly()
    x_powers = [identity()]
    y_powers = [identity()]
    for _ in range(max_total_degree):
        x_powers.append(multiply(x_powers[-1], xp))
        y_powers.append(multiply(y_powers[-1], yp))
    images = np.zeros((len(keys), len(keys)), dtype=complex)
    for col, (n, m) in enumerate(keys):
        image = apply_generator(model, multiply(x_powers[n], y_powers[m]))
        for key, c in image.terms.items():
            images[index[key], col] = c
    matrix = np.linalg.solve(A, images)
    return matrix, keys


__all__ = [
    "GNS",
    "KMS",
    "BaseMatrices",
    "apply_dual_generator",
    "apply_generator",
    "base_matrices",
    "hamiltonian_poly",
    "kraus_polys",
    "quasi_derivation_residual",
    "sum_action",
    "triangular_representation",
    "xy_pair",
    "degree_ordered_keys",
]
