# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for normal-ordered ladder-operator products.

Behavioural twin of ``gqms._wick_py`` (same functions, same results);
``gqms._kernels`` selects this module when the extension has been built.
"""

_SWAP_CACHE = {}


cpdef list lower_raise_product(int m, int n):
    """Normal-ordered expansion of a^m a†^n as (dn, dm, coeff) triples."""
    cdef dict terms, nxt
    cdef int dn, dm, i
    cdef double c
    cdef tuple key = (m, n)
    cached = _SWAP_CACHE.get(key)
    if cached is not None:
        return cached
    terms = {(0, m): 1.0}
    for i in range(n):
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


cpdef dict multiply_terms(dict left, dict right, double eps):
    """Normal-ordered product of two term maps, pruned at ``eps``."""
    cdef dict out = {}
    cdef int n1, m1, n2, m2, dn, dm
    cdef double complex c1, c2, c, acc
    cdef double w
    cdef list expansion
    cdef tuple k
    for (n1, m1), c1 in left.items():
        for (n2, m2), c2 in right.items():
            c = c1 * c2
            expansion = lower_raise_product(m1, n2)
            for dn, dm, w in expansion:
                k = (n1 + dn, dm + m2)
                prev = out.get(k)
                if prev is None:
                    out[k] = w * c
                else:
                    acc = prev
                    out[k] = acc + w * c
    return {key: val for key, val in out.items() if abs(val) > eps}
