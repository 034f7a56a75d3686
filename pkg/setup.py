"""Build script: compiles the enumeration kernel as a C extension when
Cython and a C compiler are available.  The package works without it
(maxgenus._pykernel is a drop-in fallback selected at import time), so the
extension is marked optional and a failed compile never breaks the install.
"""

import os

from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

PYX = "src/maxgenus/_speedups.pyx"

ext_modules = []
if cythonize is not None and os.path.exists(PYX):
    ext = Extension("maxgenus._speedups", [PYX], optional=True)
    ext_modules = cythonize([ext], language_level="3")

setup(ext_modules=ext_modules)
