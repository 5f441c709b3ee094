from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "jacobidim._core",
    sources=[
        "src/arith.cpp",
        "src/class_numbers.cpp",
        "src/gegenbauer.cpp",
        "src/s_functions.cpp",
        "src/group_data.cpp",
        "src/dimensions.cpp",
        "src/crosscheck.cpp",
        "src/python/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
