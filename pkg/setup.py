"""Build the optional C extension.

The package is fully functional without it; ``stcurves.kernels`` falls back
to the pure-Python implementation when the extension is absent.
"""

import os

from setuptools import Extension, setup

PYX = os.path.join("src", "stcurves", "_speedups.pyx")

try:
    from Cython.Build import cythonize

    ext_modules = (
        cythonize([Extension("stcurves._speedups", [PYX])], language_level=3)
        if os.path.exists(PYX)
        else []
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
