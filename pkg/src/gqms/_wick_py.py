"""Pure-Python kernel for normal-ordered ladder-operator products.

``gqms._wick_cy`` is the compiled twin of this module; ``gqms._kernels``
picks whichever is importable.  The two must stay behaviourally identical
(the test suite cross-checks them, benchmarks/bench_wick.py compares their
speed).

Terms are dictionaries mapping ``(n, m)`` to a complex coefficient, where
``(n, m)`` stands for the normal-ordered monomial a†^n a^m.
"""

_SWAP_CACHE = {}


def lower_raise_product(m, n):
    """Normal-ordered expansion of a^m a†^n.

    Returns a list of ``(dn, dm, coeff)`` triples meaning
    ``coeff * a†^dn a^dm``.  Built by appending one creation operator at a
    time and rewriting a a† -> a†a + 1, so every coefficient is an exact
    small integer (stored as a float).
    """
    key = (m, n)
    cached = _SWAP_CACHE.get(key)
    if cached is not None:
        return cached
    terms = {(0, m): 1.0}
    for _ in range(n):
        nxt = {}
        for (dn, dm), c in terms.items():
            if dm:
                k = (dn, dm - 1)
                nxt[k] = nxt.get(k, 0.0) + dm * c
            k = (dn + 1, dm)
            nxt[k] = nxt.get(k, 0.0) + c
        terms = nxt
    out = [(dn, dm, c) for (dn, dm), c in terms.items()]
    _SWAP_CACHE[key] = out
    return out


def multiply_terms(left, right, eps):
    """Normal-ordered product of two term maps, pruned at ``eps``."""
    out = {}
    for (n1, m1), c1 in left.items():
        for (n2, m2), c2 in right.items():
            c = c1 * c2
            for dn, dm, w in lower_raise_product(m1, n2):
                key = (n1 + dn, dm + m2)
                out[key] = out.get(key, 0.0) + w * c
    return {k: v for k, v in out.items() if abs(v) > eps}
