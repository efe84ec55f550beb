"""Exact algebra of polynomials in the bosonic ladder operators a, a†.

Everything is kept in Wick normal order: a :class:`WickPoly` maps a key
``(n, m)`` to the complex coefficient of a†^n a^m, with ``(0, 0)`` standing
for the identity.  Products are normalized through the canonical commutation
relation [a, a†] = 1 via the kernel selected in :mod:`gqms._kernels`.

Coefficients are complex doubles; terms whose magnitude drops below
:data:`PRUNE_EPS` are removed, so a polynomial that cancels exactly comes
back empty.
"""

import math
from dataclasses import dataclass

import numpy as np

from gqms._kernels import multiply_terms

PRUNE_EPS = 1e-12

LOWER = "lower"
RAISE = "raise"


class LadderWord:
    """An unordered product of scaled ladder symbols.

    ``symbols`` is a tuple of ``(kind, scale)`` pairs with ``kind`` one of
    :data:`LOWER`, :data:`RAISE`; the empty word is the identity.  Entries
    of the constructor may be bare kind strings (scale 1).
    """

    __slots__ = ("symbols",)

    def __init__(self, symbols=()):
        normalized = []
        for entry in symbols:
            if isinstance(entry, str):
                kind, scale = entry, 1.0
            else:
                kind, scale = entry
            if kind not in (LOWER, RAISE):
                raise ValueError(f"unknown ladder symbol {kind!r}")
            normalized.append((kind, complex(scale)))
        self.symbols = tuple(normalized)

    def __len__(self):
        return len(self.symbols)

    def __repr__(self):
        return f"LadderWord({list(self.symbols)!r})"


class WickPoly:
    """A finite complex combination of normal-ordered monomials a†^n a^m."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        pruned = {}
        if terms:
            for key, coeff in terms.items():
                c = complex(coeff)
                if abs(c) > PRUNE_EPS:
                    pruned[key] = c
        self.terms = pruned

    @property
    def degree(self):
        """Total degree max(n + m); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(n + m for n, m in self.terms)

    def coeff(self, n, m):
        return self.terms.get((n, m), 0j)

    def is_zero(self, tol=PRUNE_EPS):
        return all(abs(c) <= tol for c in self.terms.values())

    def isclose(self, other, tol=1e-10):
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.coeff(*k) - other.coeff(*k)) <= tol for k in keys)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0j) + c
        return WickPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0j) - c
        return WickPoly(out)

    def __neg__(self):
        return WickPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WickPoly):
            return multiply(self, other)
        return WickPoly({k: c * other for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return WickPoly({k: c * scalar for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "WickPoly(0)"
        bits = []
        for (n, m), c in sorted(self.terms.items()):
            mono = "1" if n == m == 0 else f"ad^{n} a^{m}"
            bits.append(f"({c:.6g})*{mono}")
        return "WickPoly(" + " + ".join(bits) + ")"


@dataclass(frozen=True)
class FirstOrderPoly:
    """c_a * a + c_ad * a† + c_id * 1."""

    c_a: complex
    c_ad: complex
    c_id: complex = 0j

    def as_poly(self):
        return WickPoly({(0, 1): self.c_a, (1, 0): self.c_ad, (0, 0): self.c_id})

    @classmethod
    def from_poly(cls, p):
        if p.degree > 1:
            raise ValueError(f"degree {p.degree} polynomial is not first order")
        return cls(c_a=p.coeff(0, 1), c_ad=p.coeff(1, 0), c_id=p.coeff(0, 0))


def identity():
    return WickPoly({(0, 0): 1.0})


def annihilator():
    return WickPoly({(0, 1): 1.0})


def creator():
    return WickPoly({(1, 0): 1.0})


def monomial(n, m, coeff=1.0):
    return WickPoly({(n, m): coeff})


def wick_normal_order(word):
    """Normal-order a :class:`LadderWord` into a :class:`WickPoly`.

    The word is consumed left to right, appending each symbol to an already
    normal-ordered sum and rewriting a a† -> a†a + 1; the result's degree is
    at most the word length.
    """
    terms = {(0, 0): 1.0 + 0j}
    for kind, scale in word.symbols:
        nxt = {}
        if kind == LOWER:
            for (n, m), c in terms.items():
                nxt[(n, m + 1)] = nxt.get((n, m + 1), 0j) + c * scale
        else:
            for (n, m), c in terms.items():
                if m:
                    key = (n, m - 1)
                    nxt[key] = nxt.get(key, 0j) + m * c * scale
                key = (n + 1, m)
                nxt[key] = nxt.get(key, 0j) + c * scale
        terms = nxt
    return WickPoly(terms)


def multiply(p, q):
    """Normal-ordered product p q."""
    return WickPoly(multiply_terms(p.terms, q.terms, PRUNE_EPS))


def commutator(p, q):
    """Normal-ordered [p, q] = p q - q p."""
    return multiply(p, q) - multiply(q, p)


def adjoint(p):
    """Hermitian adjoint: conjugate coefficients and swap each (n, m)."""
    return WickPoly({(m, n): c.conjugate() for (n, m), c in p.terms.items()})


def modular_transform(p, s, beta):
    """The modular flow rho^s p rho^{-s} for rho proportional to e^{-beta N}.

    Each monomial a†^n a^m picks up the factor e^{s beta (m - n)}.
    """
    if not beta > 0:
        raise ValueError("modular transform requires beta > 0")
    return WickPoly(
        {(n, m): c * math.exp(s * beta * (m - n)) for (n, m), c in p.terms.items()}
    )


def thermal_expectation(p, beta):
    """Tr(rho p) in the thermal state rho = (1 - e^{-beta}) e^{-beta N}.

    Only diagonal monomials contribute: Tr(rho a†^n a^n) = n! nbar^n with
    nbar = 1 / (e^beta - 1).
    """
    if not beta > 0:
        raise ValueError("thermal expectation requires beta > 0")
    nbar = 1.0 / math.expm1(beta)
    total = 0j
    for (n, m), c in p.terms.items():
        if n == m:
            total += c * math.factorial(n) * nbar**n
    return total


def degree_ordered_keys(max_total_degree):
    """Keys (n, m) with n + m <= max_total_degree, degree-major, n descending.

    This is the ordering (1, X, Y, X^2, XY, Y^2, ...) used for triangular
    matrix representations.
    """
    keys = []
    for d in range(max_total_degree + 1):
        for n in range(d, -1, -1):
            keys.append((n, d - n))
    return keys


def _check_xy(X, Y):
    if abs(X.c_id) > PRUNE_EPS or abs(Y.c_id) > PRUNE_EPS:
        raise ValueError("rebase requires first-order polynomials without constant term")
    det = X.c_a * Y.c_ad - X.c_ad * Y.c_a
    scale = max(abs(X.c_a), abs(X.c_ad)) * max(abs(Y.c_a), abs(Y.c_ad))
    if abs(det) <= 1e-12 * max(scale, 1.0):
        raise ValueError("rebase requires linearly independent polynomials")


def xy_basis_matrix(X, Y, max_total_degree):
    """Change-of-basis data from {X^n Y^m} to the normal-ordered basis.

    Returns ``(A, keys)`` where ``keys = degree_ordered_keys(...)`` indexes
    both the rows (normal-ordered monomials a†^i a^j) and the columns
    (products X^n Y^m), and ``A[i, c]`` is the coefficient of monomial
    ``keys[i]`` in the expansion of the column-c product.
    """
    _check_xy(X, Y)
    keys = degree_ordered_keys(max_total_degree)
    index = {key: i for i, key in enumerate(keys)}
    xp = X.as_poly()
    yp = Y.as_poly()
    x_powers = [identity()]
    y_powers = [identity()]
    for _ in range(max_total_degree):
        x_powers.append(multiply(x_powers[-1], xp))
        y_powers.append(multiply(y_powers[-1], yp))
    A = np.zeros((len(keys), len(keys)), dtype=complex)
    for col, (n, m) in enumerate(keys):
        prod = multiply(x_powers[n], y_powers[m])
        for key, c in prod.terms.items():
            A[index[key], col] = c
    return A, keys


def rebase_to_xy(p, X, Y):
    """Coefficients c with p = sum c[(n, m)] X^n Y^m (X-powers on the left).

    X and Y must be linearly independent first-order polynomials with zero
    constant term; the expansion is then unique and exact up to rounding.
    """
    d = max(p.degree, 0)
    A, keys = xy_basis_matrix(X, Y, d)
    b = np.zeros(len(keys), dtype=complex)
    index = {key: i for i, key in enumerate(keys)}
    for key, c in p.terms.items():
        b[index[key]] = c
    try:
        coeffs = np.linalg.solve(A, b)
    except np.linalg.LinAlgError as exc:
        raise ValueError("rebase basis is numerically dependent") from exc
    return {
        key: coeffs[i] for i, key in enumerate(keys) if abs(coeffs[i]) > PRUNE_EPS
    }
