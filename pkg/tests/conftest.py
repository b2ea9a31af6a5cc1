import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snarkforge.construct import flower, petersen, wheel_w8
from snarkforge.graph import Graph


@pytest.fixture(scope="session")
def P():
    return petersen()


@pytest.fixture(scope="session")
def W_parts():
    return wheel_w8()


@pytest.fixture(scope="session")
def W(W_parts):
    return W_parts[0]


@pytest.fixture(scope="session")
def J5():
    return flower(5)


@pytest.fixture(scope="session")
def prism():
    # two triangles joined by a 3-edge matching
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


@pytest.fixture(scope="session")
def K4():
    return Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
