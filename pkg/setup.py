"""Build script: compiles the optional kernel extension when Cython and a C
toolchain are available; the package falls back to the pure-Python kernels
otherwise (see ztop/_kernels.py).

Set ZTOP_NO_EXTENSION=1 to skip the compiled kernels entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc})")


ext_modules = []
_here = os.path.dirname(os.path.abspath(__file__))
_pyx = "src/ztop/_kernels_cy.pyx"
if os.environ.get("ZTOP_NO_EXTENSION") != "1" and os.path.exists(os.path.join(_here, _pyx)):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("ztop._kernels_cy", [_pyx])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available, building without compiled kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
