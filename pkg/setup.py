"""Build script for the optional compiled elimination kernel.

The package works without the extension (a pure-Python solver is selected
at import time); building it just makes large interpolation systems fast.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("gsrs._gfsolve", ["src/gsrs/_gfsolve.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
