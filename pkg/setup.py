import os

from setuptools import Extension, setup

# The compiled kernel is optional: linalg falls back to the pure-Python
# twin (_kernel_py) when poisstab._kernel is not importable.  Set
# POISSTAB_NO_EXT=1 to skip the extension build entirely.
ext_modules = []
if os.environ.get("POISSTAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("poisstab._kernel", ["src/poisstab/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
