"""Build script.  The compiled kernel is optional: if Cython (or a C
compiler) is unavailable the package falls back to the pure-Python kernel
selected at import time in pantsdist._kernel."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/pantsdist/_ckernel.pyx"],
        compiler_directives={"language_level": 3, "boundscheck": False},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print("pantsdist: skipping compiled kernel (%s)" % exc)

setup(ext_modules=ext_modules)
