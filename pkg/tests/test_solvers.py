import random

import pytest

from domrec.constructions import construct_id, construct_upper
from domrec.graph import complete, cycle, empty, from_edge_list, members, path, popcount
from domrec.solvers import (INFINITE, UNDEFINED, SetFamily, bb_optimal,
                            brute_force_minimal_dominating, brute_force_optimal,
                            enumerate_minimal_dominating, parameter)
from domrec.variants import DomVariant, satisfies

from conftest import atlas, random_graph

ALL = list(DomVariant)


def test_brute_force_c_gadget_id(c_gadget):
    value, fam = brute_force_optimal(c_gadget, DomVariant.ID_CODE)
    assert value == 3
    assert fam.as_labels() == [["x1", "x2", "x3"]]


def test_brute_force_connelly_gamma(connelly_fan):
    G = connelly_fan.graph
    value, fam = brute_force_optimal(G, DomVariant.GAMMA)
    assert value == 2
    assert set(fam) == {G.vertices_of("c", f"v{i}") for i in range(1, 5)}


def test_twins_give_infinite_id():
    value, fam = brute_force_optimal(complete(2), DomVariant.ID_CODE)
    assert value is INFINITE and len(fam) == 0
    assert bb_optimal(complete(2), DomVariant.ID_CODE) == (INFINITE, SetFamily(complete(2), ()))


@pytest.mark.parametrize("variant", [DomVariant.TOTAL, DomVariant.PAIRED, DomVariant.LOC_TOTAL])
def test_isolated_vertex_undefined(variant):
    G = from_edge_list(3, [(0, 1)])
    assert parameter(G, variant) is UNDEFINED
    assert brute_force_optimal(G, variant)[0] is UNDEFINED


def test_connected_undefined_on_disconnected():
    assert parameter(empty(2), DomVariant.CONNECTED) is UNDEFINED
    assert str(UNDEFINED) == "undefined" and str(INFINITE) == "infinity"


def test_family_is_canonical():
    fam = SetFamily(cycle(4), (5, 3, 5, 10))
    assert fam.sets == (3, 5, 10)
    assert fam.cardinality == 2
    assert {0, 2} in fam


def test_oracle_equivalence_exhaustive_small():
    for G in atlas(7):
        for v in ALL:
            assert bb_optimal(G, v) == brute_force_optimal(G, v), (G.edges(), v)


def test_oracle_equivalence_random():
    rng = random.Random(20240601)
    for _ in range(200):
        n = rng.randint(8, 16)
        G = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.7]))
        for v in ALL:
            assert bb_optimal(G, v) == brute_force_optimal(G, v), (G.edges(), v)


def test_id_construction_k2():
    # six C gadgets force three vertices each, plus one H-vertex
    C = construct_id(complete(2))
    value, fam = bb_optimal(C.graph, DomVariant.ID_CODE)
    assert value == 3 * 6 + 1 == 19
    assert len(fam) == 2
    assert all(satisfies(C.graph, S, DomVariant.ID_CODE) for S in fam)


def test_upper_construction_k2():
    C = construct_upper(complete(2))
    value, fam = bb_optimal(C.graph, DomVariant.UPPER_GAMMA)
    assert (value, len(fam)) == (10, 2)


def test_enumerate_minimal_dominating_examples(c4):
    fam = enumerate_minimal_dominating(c4)
    assert len(fam) == 6 and fam.cardinality == 2
    assert fam.as_lists() == [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]
    assert enumerate_minimal_dominating(complete(1)).as_lists() == [[0]]
    assert enumerate_minimal_dominating(path(3)).as_lists() == [[1], [0, 2]]


def test_enumerate_minimal_dominating_matches_scan():
    for G in atlas(7):
        assert enumerate_minimal_dominating(G) == brute_force_minimal_dominating(G)
    rng = random.Random(5)
    for _ in range(20):
        G = random_graph(rng, rng.randint(8, 14), rng.choice([0.2, 0.4, 0.6]))
        assert enumerate_minimal_dominating(G) == brute_force_minimal_dominating(G)


def test_upper_family_is_largest_minimal_dominating():
    rng = random.Random(11)
    for _ in range(25):
        G = random_graph(rng, rng.randint(5, 12), rng.choice([0.2, 0.4, 0.6]))
        every = enumerate_minimal_dominating(G)
        top = max(popcount(S) for S in every)
        value, fam = bb_optimal(G, DomVariant.UPPER_GAMMA)
        assert value == top
        assert fam.sets == tuple(S for S in every if popcount(S) == top)


def test_fig4_id_number(fig4):
    assert parameter(fig4, DomVariant.ID_CODE) == 5


def test_z_gadget_upper_domination(z_gadget):
    value, fam = brute_force_optimal(z_gadget, DomVariant.UPPER_GAMMA)
    assert bb_optimal(z_gadget, DomVariant.UPPER_GAMMA) == (value, fam)
    # X = {x1, x2, x3} is minimal dominating (each x_j keeps itself private)
    assert value == 3
    assert z_gadget.vertices_of("x1", "x2", "x3") in fam


def test_returned_sets_satisfy_and_are_optimal():
    rng = random.Random(3)
    for _ in range(15):
        G = random_graph(rng, rng.randint(4, 9), 0.4)
        for v in ALL:
            value, fam = bb_optimal(G, v)
            if not isinstance(value, int):
                continue
            assert all(satisfies(G, S, v) and popcount(S) == value for S in fam)
            if not v.maximize:
                assert not any(satisfies(G, S, v) for S in range(1 << G.n) if popcount(S) < value)


def test_inequality_chains_sample():
    rng = random.Random(99)
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 9), 0.5)
        g = parameter(G, DomVariant.GAMMA)
        ir = parameter(G, DomVariant.IR)
        assert ir <= g <= 2 * ir - 1
        assert g <= parameter(G, DomVariant.UPPER_GAMMA)
        if all(G.adj):
            t = parameter(G, DomVariant.TOTAL)
            assert g <= t <= parameter(G, DomVariant.PAIRED)


def test_members_helper():
    assert members(0b1011) == [0, 1, 3]
