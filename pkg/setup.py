"""Build script: compiles the optional Wick-product kernel.

The package is pure Python except for ``gqms._wick_cy``, a Cython twin of
``gqms._wick_py`` used for the hot normal-ordering loop.  The extension is
optional: set GQMS_NO_EXTENSION=1 (or build without Cython / a C compiler)
and the package falls back to the pure-Python kernel at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("GQMS_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gqms/_wick_cy.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
