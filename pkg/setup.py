"""Build script: compiles the optional elimination core.

The compiled extension is a performance twin of isostrat._elim; the package
works without it (pure-Python fallback is selected at import).  Set
ISOSTRAT_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ISOSTRAT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("isostrat._elim_c", ["src/isostrat/_elim_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
