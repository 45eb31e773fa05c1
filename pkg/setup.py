"""Build hook for the optional Cython kernel extension.

The package is pure Python except for paradim._fastkernels, which
accelerates the two inner loops (class-number enumeration and the
generalized Bernoulli character sum).  If Cython or a C compiler is
unavailable the build falls back to the pure-Python twin in
paradim._kernels_py and everything still works.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("paradim._fastkernels", ["src/paradim/_fastkernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
