"""Build script for the optional compiled kernels.

The package is fully functional without the extension: ``effecttopo.kernels``
falls back to the pure-Python implementations at import time.  Set
``EFFECTTOPO_NO_EXT=1`` to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("EFFECTTOPO_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "effecttopo._kernels_cy",
                    ["src/effecttopo/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available; ship the pure-Python path only.
        ext_modules = []

setup(ext_modules=ext_modules)
