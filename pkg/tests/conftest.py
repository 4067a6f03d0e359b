from __future__ import annotations

import json

import numpy as np
import pytest

from eaforge.codes import code_from_generator, code_from_parity
from eaforge.field import gf
from eaforge.linalg import MatGF

HAMMING_H = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]

# lines printed by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def hamming():
    F = gf(2)
    return code_from_parity(F, MatGF(F, HAMMING_H))


@pytest.fixture
def repetition():
    F = gf(2)
    return code_from_generator(F, MatGF(F, [[1, 1, 1]]))


@pytest.fixture
def gf9_parity_code():
    """[3,2,2] over GF(9) with parity-check (1,1,1)."""
    F = gf(9)
    return code_from_parity(F, MatGF(F, [[1, 1, 1]]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def write_json(tmp_path):
    def write(name: str, obj) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
