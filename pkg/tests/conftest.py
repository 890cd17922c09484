from pathlib import Path

import pytest

from ivybound.graph import read_dag

DATA = Path(__file__).parent / "data"


@pytest.fixture
def six_path():
    return DATA / "six.edges"


@pytest.fixture
def six(six_path):
    return read_dag(six_path.read_text())


@pytest.fixture
def ids(six):
    """Name-to-id lookup for the six-vertex fixture."""
    return lambda names: [six.index(x) for x in names]
