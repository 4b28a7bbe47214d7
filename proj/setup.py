from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core = Pybind11Extension(
    "segmarket._core",
    sources=[
        "python/bindings.cpp",
        "src/types.cpp",
        "src/special_functions.cpp",
        "src/market.cpp",
        "src/bertrand.cpp",
        "src/cournot.cpp",
        "src/monopoly.cpp",
        "src/segmentation.cpp",
        "src/verification.cpp",
        "src/io.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[core], cmdclass={"build_ext": build_ext})
