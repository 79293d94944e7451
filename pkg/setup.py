"""Build hook: compile the accelerator extension when a toolchain is present.

The package works without the extension (a NumPy fallback ships alongside),
so any compilation failure is demoted to a warning instead of aborting the
install.
"""

import warnings

from setuptools import Extension, setup


def _ext_modules():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        warnings.warn(f"accelerator extension skipped: {exc}")
        return []
    ext = Extension(
        "torussum._accel",
        sources=["src/torussum/_accel.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    try:
        return cythonize(
            [ext],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception as exc:  # build must survive a broken toolchain
        warnings.warn(f"accelerator extension skipped: {exc}")
        return []


setup(ext_modules=_ext_modules())
