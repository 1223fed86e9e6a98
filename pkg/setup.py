"""Builds the optional compiled kernels; the package falls back to numpy without them."""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as e:  # no compiler or no Cython: keep the pure-Python install
            print(f"warning: compiled kernels not built ({e})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            print(f"warning: {ext.name} not built ({e})")


try:
    from Cython.Build import cythonize
    extensions = cythonize([Extension("lpc._kernels", ["src/lpc/_kernels.pyx"])],
                           compiler_directives={"language_level": "3"})
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
