"""Build script: compiles the optional Cython kernels.

The package works without the extension (a pure-NumPy backend is selected at
import time), so a failed compile only costs speed, never functionality.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as err:  # missing compiler, broken toolchain, ...
            self._skip(err)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as err:
            self._skip(err)

    @staticmethod
    def _skip(err):
        print(f"rishape: compiled kernels unavailable ({err}); "
              f"the pure-Python backend will be used")


def extensions():
    if os.environ.get("RISHAPE_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "rishape._kernels",
        sources=["src/rishape/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
