from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("diskjet._kernels", ["src/diskjet/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    # pure-Python fallback backend is selected at import time
    ext_modules = []

setup(ext_modules=ext_modules)
