"""Build script. The compiled kernel module is optional: when Cython or a C
toolchain is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BWTVARIANTS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bwtvariants._native",
                    ["src/bwtvariants/_native.pyx"],
                    extra_compile_args=["-O2"],
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
        ext_modules = []

setup(ext_modules=ext_modules)
