import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/geoswap/_ckernels.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pure-Python kernels take over at import time
    print(f"geoswap: compiled kernels skipped ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
