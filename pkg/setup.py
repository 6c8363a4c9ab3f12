"""Best-effort build of the compiled kernel extension.

The package works without it (tileweave._kernels falls back to numpy /
pure Python), so a missing compiler or Cython must not fail the install.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "tileweave._kernels._core",
                ["src/tileweave/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
