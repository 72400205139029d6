import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corrideal import INF, GraphDesc, graph_to_correspondence, validate_correspondence  # noqa: E402

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def make_ex1():
    # C + C + M_2 with the endomorphism (x, y, T) -> (0, 0, diag(x, y))
    return validate_correspondence({
        "blocks": [("a", 1), ("b", 1), ("c", 2)],
        "fullness": [1, 1, 2],
        "action": [("c", "a", 1), ("c", "b", 1)],
    })


def make_ex2():
    # C^3 acting on C + C through its third coordinate
    return validate_correspondence({
        "blocks": [("p1", 1), ("p2", 1), ("p3", 1)],
        "fullness": [1, 1, 0],
        "action": [("p1", "p3", 1), ("p2", "p3", 1)],
    })


def make_graph():
    # v0 -> v2 once, v1 -> v2 infinitely often
    return graph_to_correspondence(
        GraphDesc.build(["v0", "v1", "v2"], [("v0", "v2", 1), ("v1", "v2", INF)])
    )


FIXTURES = {"ex1": make_ex1, "ex2": make_ex2, "graph": make_graph}


@pytest.fixture
def ex1():
    return make_ex1()


@pytest.fixture
def ex2():
    return make_ex2()


@pytest.fixture
def graph():
    return make_graph()


@pytest.fixture(params=sorted(FIXTURES))
def fixture_name(request):
    return request.param


@pytest.fixture
def worked_example(fixture_name):
    return FIXTURES[fixture_name]()
