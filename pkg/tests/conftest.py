from decimal import Decimal

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from graphenergy.graph import Graph, generate


def within(value, printed, tol):
    """``|value - printed| <= tol`` in exact arithmetic.

    ``printed`` is the decimal string as reported; comparing exactly keeps
    half-way cells such as 8.4375 vs "8.438" on the right side of the line.
    """
    return abs(Decimal(value) - Decimal(printed)) <= Decimal(tol)


def random_connected_graph(rng, n_min, n_max):
    """Random spanning tree plus independent extra edges."""
    n = int(rng.integers(n_min, n_max + 1))
    order = rng.permutation(n)
    edges = {(int(order[i]), int(order[rng.integers(0, i)])) for i in range(1, n)}
    p = rng.uniform(0.0, 0.8)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(edges, n=n)


def random_population(count, n_min, n_max, seed):
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, n_min, n_max) for _ in range(count)]


def from_nx(G):
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.edges(), n=G.number_of_nodes())


def connected_atlas(max_n=7):
    """Every connected graph on 2..max_n vertices, up to isomorphism."""
    return [from_nx(G) for G in nx.graph_atlas_g()
            if 2 <= G.number_of_nodes() <= max_n and nx.is_connected(G)]


def diamond():
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def petersen():
    return from_nx(nx.petersen_graph())


@st.composite
def connected_graphs(draw, n_min=2, n_max=9):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected_graph(np.random.default_rng(seed), n_min, n_max)


@pytest.fixture(scope="session")
def atlas7():
    return connected_atlas(7)


@pytest.fixture
def dodecahedron():
    return generate("dodecahedron")


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
