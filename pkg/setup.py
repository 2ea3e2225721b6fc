import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("RSL_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/rsl/_kernel_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build-env dependent
        sys.stderr.write(
            "rsl: Cython extension not built (%s); pure-Python kernel will be used\n" % exc
        )
        ext_modules = []

setup(ext_modules=ext_modules)
