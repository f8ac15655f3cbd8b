"""Identifying codes: the C gadget, the converse failure, and the forcing construction."""

import time

from domrec import DomVariant, bb_optimal, brute_force_optimal, construct_id
from domrec.constructions import GadgetKind, attach, make_gadget
from domrec.graph import Graph, complete, cycle, popcount
from domrec.variants import is_identifying_code

C = make_gadget(GadgetKind.C_GADGET)
value, family = brute_force_optimal(C.graph, DomVariant.ID_CODE)
print("C gadget: γ^ID =", value, "sets", family.as_labels())

# C4 with the gadget hanging off v4
host = Graph(4, cycle(4).adj, ["v1", "v2", "v3", "v4"])
G = attach(host, C, 3)
value, family = bb_optimal(G, DomVariant.ID_CODE)
print("C4 + gadget: γ^ID =", value)
for labels in family.as_labels():
    print("  ", ",".join(labels))
print("{v1,v3} identifies C4 on its own:", is_identifying_code(cycle(4), {0, 2}))

for H in (complete(1), complete(2)):
    t = time.perf_counter()
    K = construct_id(H)
    value, family = bb_optimal(K.graph, DomVariant.ID_CODE)
    X = 0
    for _, start in K.gadgets:
        X |= 0b111 << start
    print(f"n={H.n}: {K.graph.n} vertices, γ^ID = {value}, {len(family)} sets, "
          f"forced x-vertices {popcount(X)}, all contain them: {all(S & X == X for S in family)} "
          f"({time.perf_counter() - t:.1f}s)")
    print("   the forced part identifies on its own:", is_identifying_code(K.graph, X))
