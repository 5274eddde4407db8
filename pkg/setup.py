import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FACTORLAB_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/factorlab/_kernel.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        # No Cython: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
