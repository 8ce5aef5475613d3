from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).resolve().parent

CORE_SOURCES = [
    "src/arithmetic.cpp",
    "src/bound.cpp",
    "src/congruence.cpp",
    "src/towers.cpp",
    "src/expression.cpp",
    "src/datasets.cpp",
    "src/verify.cpp",
]

DATASETS = [
    "cyclotomic_minus",
    "cyclotomic_real",
    "cubic_real",
    "real_cyclic_small_conductor",
    "quintic",
    "decimic",
]


def render_bundled_data() -> str:
    """Expand src/bundled_data.cpp.in with the shipped TSV tables."""
    text = (ROOT / "src" / "bundled_data.cpp.in").read_text()
    for name in DATASETS:
        token = "@CLASSNUM_DATA_" + name.upper() + "@"
        text = text.replace(token, (ROOT / "data" / (name + ".tsv")).read_text())
    out = ROOT / "build" / "_generated" / "bundled_data.cpp"
    out.parent.mkdir(parents=True, exist_ok=True)
    if not out.exists() or out.read_text() != text:
        out.write_text(text)
    return str(out.relative_to(ROOT))


setup(
    ext_modules=[
        Pybind11Extension(
            "classnum._core",
            ["bindings/module.cpp"] + CORE_SOURCES + [render_bundled_data()],
            include_dirs=["include"],
            libraries=["gmpxx", "gmp", "mpfr"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
