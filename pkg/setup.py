import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MODINV_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("modinv._scan", ["src/modinv/_scan.pyx"], optional=True)],
            language_level=3,
        )

setup(ext_modules=ext_modules)
