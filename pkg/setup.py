"""Build script.

The package is pure Python; if Cython is available at build time we also
compile the state-sum hot loop (`tanglekit._kernel_c`) as an optional
extension. Failure to build the extension is never fatal: the import
layer in `tanglekit.kernel` falls back to the pure-Python twin.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tanglekit/_kernel_c.pyx"],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
