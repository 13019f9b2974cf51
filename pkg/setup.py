"""Build script for the optional Cython kernels.

The package works without the compiled module; ``duclab.kernels`` falls back
to the numpy implementation when ``duclab._kernels`` cannot be imported.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DUCLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - build without Cython
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "duclab._kernels",
                    ["src/duclab/_kernels.pyx"],
                    language="c++",
                    extra_compile_args=["-O3", "-std=c++17"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
