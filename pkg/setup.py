"""Builds the optional compiled kernel.  Without Cython or a C compiler the
package still installs and uses the pure-Python kernel."""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or failing
            self.warn(f"compiled kernel not built ({exc}); using the Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self.warn(f"compiled kernel not built ({exc}); using the Python fallback")


def extensions():
    if os.environ.get("CTCSIDH_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "ctcsidh._ckernel",
        sources=["src/ctcsidh/_ckernel.pyx"],
        include_dirs=["src/ctcsidh"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
