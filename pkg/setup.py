from setuptools import setup

# The compiled kernel is optional: without Cython (or a C++ toolchain) the
# package installs anyway and pebbling.engine falls back to the pure-Python
# kernel at import time.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension(
            "pebbling._fastcore",
            ["src/pebbling/_fastcore.pyx"],
            language="c++",
            extra_compile_args=["-O2", "-std=c++11"],
        )],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
