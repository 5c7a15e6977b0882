"""Build script: compiles the optional search/DP kernel.

The compiled extension is a pure speed-up; if Cython or a C compiler is
unavailable the install proceeds and the package falls back to the
pure-Python kernel at import time (see zschur.backend).
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the extension instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: compiled kernel skipped ({exc}); "
              "zschur will use the pure-Python fallback")


def extensions():
    if os.environ.get("ZSCHUR_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; building without compiled kernel")
        return []
    ext = Extension(
        "zschur._kernel",
        ["src/zschur/_kernel.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
