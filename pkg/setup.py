"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile only costs speed.
Set AGMBOUNDS_SKIP_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("AGMBOUNDS_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "agmbounds._kernels_cy",
                    sources=["src/agmbounds/_kernels_cy.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("Cython not available; building pure-Python agmbounds only")

setup(ext_modules=ext_modules)
