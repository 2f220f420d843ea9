"""Build script: compiles the optional Cython stepping kernel.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so a missing compiler or Cython only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "orbitkit._integrate.core",
                ["src/orbitkit/_integrate/core.pyx"],
            )
        ],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"orbitkit: building without compiled core ({exc})")

setup(ext_modules=ext_modules)
