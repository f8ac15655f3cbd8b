import random

import networkx as nx
import pytest

from domrec.constructions import GadgetKind, attach, construct_connelly, make_gadget
from domrec.graph import Graph, cycle, from_edge_list, k4_minus_e


def from_nx(g) -> Graph:
    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return from_edge_list(len(nodes), [(pos[u], pos[v]) for u, v in g.edges()])


def atlas(max_n=7, connected_only=False):
    """All graphs on 1..max_n vertices up to isomorphism (networkx atlas)."""
    out = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n:
            if connected_only and not nx.is_connected(g):
                continue
            out.append(from_nx(g))
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus independent extra edges with a random density."""
    p = rng.choice([0.0, 0.1, 0.2, 0.35, 0.5, 0.7])
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return from_edge_list(n, sorted(edges))


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def bull():
    return make_gadget(GadgetKind.BULL).graph


@pytest.fixture
def c_gadget():
    return make_gadget(GadgetKind.C_GADGET).graph


@pytest.fixture
def z_gadget():
    return make_gadget(GadgetKind.Z_GADGET).graph


@pytest.fixture
def connelly_fan():
    return construct_connelly(k4_minus_e())


@pytest.fixture
def fig4():
    """C4 on v1..v4 with the C gadget attached at v4."""
    c4 = Graph(4, cycle(4).adj, ["v1", "v2", "v3", "v4"])
    return attach(c4, make_gadget(GadgetKind.C_GADGET), 3)




ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
