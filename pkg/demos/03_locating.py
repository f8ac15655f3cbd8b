"""Locating domination with bull gadgets; the optimal sets are also total."""

from domrec import AdjacencyModel, DomVariant, bb_optimal, build_variant_graph, construct_locating
from domrec.constructions import GadgetKind, make_gadget
from domrec.graph import path
from domrec.variants import is_locating_total_dominating
from domrec.verify import are_isomorphic

bull = make_gadget(GadgetKind.BULL).graph
value, family = bb_optimal(bull, DomVariant.LOC_DOM)
print("bull: γ_L =", value, family.as_labels())

H = path(3)
C = construct_locating(H)
value, family = bb_optimal(C.graph, DomVariant.LOC_DOM)
print(f"P3 host -> {C.graph.n} vertices, γ_L = {value}, {len(family)} sets")
for S in family:
    print("  total as well:", is_locating_total_dominating(C.graph, S),
          " H-vertex:", C.graph.format_set(S & H.full))
R = build_variant_graph(C.graph, DomVariant.LOC_DOM, AdjacencyModel.SLIDE, family=family)
print("γ_L-graph isomorphic to P3:", are_isomorphic(R.as_graph(), H)[0])
print("γ_t^L agrees:", bb_optimal(C.graph, DomVariant.LOC_TOTAL) == (value, family))
