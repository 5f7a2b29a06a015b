"""Build the optional C walk kernel.

The package works without it (a NumPy fallback is selected at import time),
but the compiled kernel makes the big rate sweeps roughly an order of
magnitude faster. Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "benfordlab._kernel._native",
                ["src/benfordlab/_kernel/_native.pyx"],
                extra_compile_args=["-O3"],
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
