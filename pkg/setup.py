"""Build hook for the optional compiled kernels.

Project metadata lives in ``pyproject.toml``.  If Cython or a C compiler is
unavailable the package installs without the extension and the pure-Python
kernels are used.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("eqmotive._ckernels", ["src/eqmotive/_ckernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
