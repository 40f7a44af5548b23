from setuptools import Extension, setup

# The compiled sieve kernel is optional: without Cython (or a working C
# compiler) the package falls back to the pure-Python sieve at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("apx._sieve", ["src/apx/_sieve.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
