from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "noma_aloha._kernel_cy",
                ["src/noma_aloha/_kernel_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install pure-Python only, the kernel selector falls back.
    ext_modules = []

setup(ext_modules=ext_modules)
