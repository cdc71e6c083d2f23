import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("SYNABS_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "synabs.bdd._kernel_cy",
                ["src/synabs/bdd/_kernel_cy.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
