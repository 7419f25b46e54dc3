import pathlib

import pytest

from pkat.plts import load_model

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def two_state_model():
    """Two states, one program r, one test p, over the three-valued chain."""
    return load_model((DATA / "two_state.json").read_text())


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def golden_dir():
    return GOLDEN
