import os

from setuptools import setup

ext_modules = []
if os.environ.get("PRONAUDIT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pronaudit/_speedups.pyx"], language_level=3
        )
    except ImportError:
        # pure-Python fallback keeps everything working without Cython
        ext_modules = []

setup(ext_modules=ext_modules)
