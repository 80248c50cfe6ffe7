import sys

from setuptools import Extension, setup

# The compiled correlation kernels are optional: if Cython, numpy headers or
# a C compiler are unavailable the package installs with the numpy fallback.
ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext = Extension(
        "ltest._kernels",
        ["src/ltest/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    ext_modules = cythonize([ext], language_level="3")
except Exception as exc:  # pragma: no cover - environment dependent
    sys.stderr.write(f"ltest: skipping compiled kernels ({exc!r}); "
                     "the pure numpy backend will be used\n")

setup(ext_modules=ext_modules)
