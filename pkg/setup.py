"""Build script; compiles the optional enumeration kernels.

The package is pure Python plus one optional Cython extension
(catpark._fastcore).  When Cython is unavailable or the compile fails, the
install proceeds without it and catpark.kernels falls back to the pure
implementation.

    pip install -e . --no-build-isolation
    python setup.py build_ext --inplace   # just the extension
"""

from setuptools import setup

extensions = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "catpark._fastcore",
                sources=["src/catpark/_fastcore.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; building without the compiled kernels")

setup(ext_modules=extensions)
