from pathlib import Path

import pytest

from bmsdecode.code import build_code
from bmsdecode.gf import FieldSpec, GaloisField
from bmsdecode.io import load_code
from bmsdecode.poly2 import parse_word

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"
GOLDEN = Path(__file__).resolve().parent / "golden"

EXAMPLE_ORBITS = [(0, 13), (1, 13), (2, 13), (3, 13), (4, 13), (0, 0), (0, 1)]
EXAMPLE_ERROR = "X1^2*X2^2 + X2"

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def gf16():
    return GaloisField.get(FieldSpec.default(2, 1, 4))


@pytest.fixture(scope="session")
def example_code():
    return build_code(FieldSpec(2, 1, 4, (1, 1, 0, 0, 1)), (5, 15), EXAMPLE_ORBITS,
                      (3, 1), (0, 13), 5, "worked-example")


@pytest.fixture(scope="session")
def example_error(example_code):
    return parse_word(EXAMPLE_ERROR, example_code.field, example_code.bounds)


@pytest.fixture(scope="session")
def matrix_codes():
    """The hyperbolic-like test matrix, keyed by config name."""
    return {p.stem: load_code(p) for p in sorted(CONFIGS.glob("gf*_t[1-4]*.json"))}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
