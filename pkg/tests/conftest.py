import pytest

from hyperci.hypergraph import Hypergraph

from tests.utils import EXAMPLE_PATH, example_hypergraph


@pytest.fixture
def example() -> Hypergraph:
    """The seven-node example hypergraph with four hyperedges."""
    return example_hypergraph()


@pytest.fixture
def example_path() -> str:
    return EXAMPLE_PATH


@pytest.fixture
def ids(example):
    """Label -> node id lookup for the example hypergraph."""
    return example.index_of
