"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python bitset
implementation is selected at import time), so compilation failures are
non-fatal: the Extension is marked optional.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "groupdiff._kernels._speedups",
                ["src/groupdiff/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
