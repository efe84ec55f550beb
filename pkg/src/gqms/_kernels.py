"""Backend selection for the normal-ordering kernel.

The compiled extension is optional.  The pure-Python twin is used when the
extension is missing or when GQMS_PURE_PYTHON=1 is set (handy for debugging
and for the backend comparison benchmark).
"""

import os

if os.environ.get("GQMS_PURE_PYTHON") == "1":
    from gqms._wick_py import lower_raise_product, multiply_terms

    BACKEND = "python"
else:
    try:
        from gqms._wick_cy import lower_raise_product, multiply_terms

        BACKEND = "cython"
    except ImportError:
        from gqms._wick_py import lower_raise_product, multiply_terms

        BACKEND = "python"

__all__ = ["BACKEND", "lower_raise_product", "multiply_terms"]
