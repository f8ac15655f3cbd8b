import dataclasses
import json
import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from domrec.constructions import construct_connelly, construct_upper
from domrec.errors import NoConstructionForVariant, ParameterMismatch
from domrec.graph import complete, cycle, from_edge_list, k4_minus_e, path, relabel
from domrec.reconfig import AdjacencyModel
from domrec.variants import DomVariant
from domrec.verify import (are_isomorphic, find_induced, forbidden_jump_subgraphs,
                           is_isomorphism, verify_construction, verify_realizability,
                           verify_sweep)

from conftest import atlas, random_graph


def _to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def _shuffle(G, rng):
    perm = list(range(G.n))
    rng.shuffle(perm)
    return from_edge_list(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def test_isomorphism_examples():
    H = k4_minus_e()
    ok, m = are_isomorphic(H, _shuffle(H, random.Random(1)))
    assert ok and is_isomorphism(H, _shuffle(H, random.Random(1)), m)
    assert are_isomorphic(cycle(4), H) == (False, None)
    assert not are_isomorphic(cycle(6), from_edge_list(6, cycle(3).edges() + [(3, 4), (4, 5), (3, 5)]))[0]


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(4)
    graphs = atlas(6)
    for _ in range(300):
        A, B = rng.choice(graphs), rng.choice(graphs)
        if rng.random() < 0.5:
            B = _shuffle(A, rng)
        ok, m = are_isomorphic(A, B)
        assert ok == nx.is_isomorphic(_to_nx(A), _to_nx(B))
        if ok:
            assert is_isomorphism(A, B, m)


def test_isomorphism_is_an_equivalence():
    rng = random.Random(6)
    for _ in range(40):
        A = random_graph(rng, rng.randint(1, 12), 0.4)
        B, C = _shuffle(A, rng), _shuffle(A, rng)
        assert are_isomorphic(A, A)[0]
        assert are_isomorphic(A, B)[0] and are_isomorphic(B, A)[0]
        assert are_isomorphic(A, C)[0] and are_isomorphic(B, C)[0]


def test_find_induced_agrees_with_networkx():
    rng = random.Random(9)
    patterns = list(forbidden_jump_subgraphs().values()) + [path(3), cycle(4)]
    for _ in range(150):
        G = random_graph(rng, rng.randint(3, 9), rng.choice([0.3, 0.6, 0.8]))
        for P in patterns:
            m = find_induced(G, P)
            expected = GraphMatcher(_to_nx(G), _to_nx(P)).subgraph_is_isomorphic()
            assert (m is not None) == expected
            if m is not None:
                assert all(P.has_edge(u, v) == G.has_edge(m[u], m[v])
                           for u in range(P.n) for v in range(u + 1, P.n))


def test_forbidden_patterns_shape():
    shapes = {k: (P.n, P.edge_count) for k, P in forbidden_jump_subgraphs().items()}
    assert shapes == {"K_{3,2}": (5, 6), "P3 v K2": (5, 9), "(K2 u K1) v 2K1": (5, 7)}


def test_verify_fan_gamma():
    rep = verify_realizability(k4_minus_e(), DomVariant.GAMMA, AdjacencyModel.SLIDE)
    assert rep.isomorphic and rep.value == 2 and rep.set_count == 4
    assert is_isomorphism(k4_minus_e(), from_edge_list(4, k4_minus_e().edges()), rep.witness)
    d = json.loads(rep.to_json())
    assert d["variant"] == "gamma" and d["sets"][0] == ["v1", "c"]
    assert "≅ H  yes" in rep.to_text()


def test_verify_upper_k2():
    rep = verify_realizability(complete(2), DomVariant.UPPER_GAMMA)
    assert rep.isomorphic and (rep.value, rep.set_count) == (10, 2)
    # witness sends v_i to the node whose set contains v_i
    assert rep.witness == {0: 0, 1: 1}


def test_verify_witness_follows_host_vertex():
    H = relabel(path(4), [2, 0, 3, 1])
    rep = verify_realizability(H, DomVariant.TOTAL)
    C = construct_connelly(H)
    for i, node in rep.witness.items():
        assert f"v{i + 1}" in rep.sets[node]
    assert rep.graph_n == C.graph.n


def test_parameter_mismatch_is_hard():
    C = dataclasses.replace(construct_upper(complete(1)), expected_value=99)
    with pytest.raises(ParameterMismatch):
        verify_construction(C, DomVariant.UPPER_GAMMA)


def test_no_construction():
    with pytest.raises(NoConstructionForVariant):
        verify_realizability(complete(2), DomVariant.UPPER_IR)


def test_sweep_is_order_stable():
    hosts = [complete(1), path(3)]
    variants = [DomVariant.GAMMA, DomVariant.PAIRED]
    seq = verify_sweep(hosts, variants, workers=1)
    par = verify_sweep(hosts, variants, workers=2)
    assert [r.as_dict() for r in seq] == [r.as_dict() for r in par]
    assert [r.host_n for r in seq] == [1, 1, 3, 3]
