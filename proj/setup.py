from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "conn2k._conn2k",
    sources=[
        "python/bindings.cpp",
        "src/augmentation.cpp",
        "src/biset.cpp",
        "src/connectivity.cpp",
        "src/construction.cpp",
        "src/flow.cpp",
        "src/json_io.cpp",
        "src/multigraph.cpp",
        "src/splitting.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
