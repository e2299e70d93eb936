"""Build script: compiles the optional Cython speedups.

Set ELLGT_NO_EXT=1 to skip compilation; the package falls back to the
pure-Python kernels at import time.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("ELLGT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/ellgt/_kernels/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
