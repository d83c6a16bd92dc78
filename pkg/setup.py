"""Build script.

The compiled scalar core is optional: if Cython (or a C compiler) is
unavailable, or MOLIEN_NO_EXTENSION is set, the package installs without it
and falls back to the pure-Python scalar implementation at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MOLIEN_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/molien/_gauss_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
