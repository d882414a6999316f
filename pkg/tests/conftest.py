"""Shared representations; session-scoped because group closures are reused everywhere."""

from __future__ import annotations

from importlib import resources

import pytest

from isostrat.exact import ExactMatrix
from isostrat.reps import harmonic_rep, matrix_rep, permutation_rep

ROT_Z_QUARTER = ExactMatrix([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
ROT_X_QUARTER = ExactMatrix([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
ROT_X_HALF = ExactMatrix([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
ROT_Y_HALF = ExactMatrix([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
SWAP_XY = ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


@pytest.fixture(scope="session")
def s3_rep():
    return permutation_rep([[2, 1, 3], [2, 3, 1]], 3)


@pytest.fixture(scope="session")
def sign_rep():
    return matrix_rep([ExactMatrix([[-1, 0], [0, -1]])], ("x", "y"))


@pytest.fixture(scope="session")
def h2_rep():
    return harmonic_rep(2, [ROT_Z_QUARTER, ROT_X_QUARTER], include_so3_lie=True)


@pytest.fixture(scope="session")
def h4_rep():
    return harmonic_rep(4, [ROT_Z_QUARTER, ROT_X_QUARTER], include_so3_lie=True)


def fixture_text(name: str) -> str:
    return resources.files("isostrat").joinpath(f"fixtures/{name}").read_text()


@pytest.fixture(scope="session")
def s3_session_text():
    return fixture_text("s3.json")


@pytest.fixture(scope="session")
def h2_session_text():
    return fixture_text("h2.json")


@pytest.fixture(scope="session")
def h4_session_text():
    return fixture_text("h4.json")
