import os

import networkx as nx
import pytest

from chibound.config import use_settings
from chibound.graph import from_edges
from chibound.graph_io import parse_graph6

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES_DIR, f"{name}.g6")


def load_fixture(name):
    with open(fixture_path(name), "rb") as f:
        return parse_graph6(f.read())


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H):
    return from_edges(H.number_of_nodes(), H.edges())


def diamond():
    """K4 minus the edge 0-2."""
    return from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("CHIBOUND_ORACLE_LIMIT", raising=False)
    monkeypatch.delenv("CHIBOUND_CONFIG", raising=False)
    use_settings(None)
    yield
    use_settings(None)


@pytest.fixture
def fixture_graph():
    return load_fixture
