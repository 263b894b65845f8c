import networkx as nx
import pytest

from hpindex import Graph, enumerate_free_trees


def nx_graph(g: Graph) -> nx.Graph:
    """networkx copy of a Graph, for cross-checking against a second library."""
    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(g.label_edges())
    return h


def all_trees(max_n: int) -> list[Graph]:
    return [t for n in range(1, max_n + 1) for t in enumerate_free_trees(n)]


@pytest.fixture(scope="session")
def trees_to_9():
    return all_trees(9)


@pytest.fixture(scope="session")
def trees_to_11():
    return all_trees(11)
