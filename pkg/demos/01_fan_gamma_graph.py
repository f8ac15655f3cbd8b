"""Every graph is a γ-graph: rebuild the 2-fan K4-e from its gadget graph.

Three hubs a, b, c see every host vertex and c carries two pendants, so c is
in every minimum dominating set and the second member is one host vertex.
Two such sets differ by a slide exactly when their host vertices are adjacent.
"""

from domrec import (AdjacencyModel, DomVariant, bb_optimal, build_variant_graph,
                    construct_connelly, are_isomorphic)
from domrec.graph import k4_minus_e
from domrec.reconfig import analyze, frozen_vertices

H = k4_minus_e()
C = construct_connelly(H)
G = C.graph
print(f"host: {H.n} vertices, {H.edge_count} edges")
print(f"built graph: {G.n} vertices, {G.edge_count} edges")

for v in C.variants:
    value, family = bb_optimal(G, v)
    print(f"{v.symbol:>6} = {value}: " + "  ".join("{" + G.format_set(S) + "}" for S in family))

R = build_variant_graph(G, DomVariant.GAMMA, AdjacencyModel.SLIDE)
ok, mapping = are_isomorphic(H, R.as_graph())
print("γ-graph isomorphic to the host:", ok)
for h, node in mapping.items():
    print(f"  v{h + 1} -> {R.node_label(node)}")

rep = analyze(R)
print("components", rep.component_count, "diameter", rep.diameters[0])
print("frozen at every node:", {G.format_set(f) for f in frozen_vertices(R).values()})
