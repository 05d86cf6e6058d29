import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# kernel when the extension is absent (COFINJ_NO_EXT=1 skips the build).
ext_modules = []
if os.environ.get("COFINJ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cofinj._ckernel", ["src/cofinj/_ckernel.pyx"])],
            language_level=3,
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
