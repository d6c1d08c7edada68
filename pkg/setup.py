import setuptools

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the kernel falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [setuptools.Extension("unipotent_sqint._kernel", ["src/unipotent_sqint/_kernel.pyx"],
                              language="c++", extra_compile_args=["-O3"])],
        language_level="3",
    )

setuptools.setup(ext_modules=ext_modules)
