from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("sigmafact._ckernels", ["src/sigmafact/_ckernels.pyx"], optional=True,
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
