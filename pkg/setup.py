"""Build script: compiles the optional search kernel extension.

The package is pure Python except for homstruct._kernels._ckern, a Cython
module that accelerates exhaustive structure searches over prime fields.
If Cython or a C compiler is unavailable the build falls back to the pure
Python kernel and the package still installs.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to the pure-Python kernel on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"compiled search kernel not built ({exc}); "
                          "falling back to the pure Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled search kernel not built ({exc}); "
                          "falling back to the pure Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError as exc:
        warnings.warn(f"Cython unavailable ({exc}); building without the "
                      "compiled search kernel")
        return []
    return cythonize(
        [Extension("homstruct._kernels._ckern",
                   ["src/homstruct/_kernels/_ckern.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
