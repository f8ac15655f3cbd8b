"""Reconfiguration graphs: k-dominating graphs, slide vs jump, stuck and frozen vertices."""

from domrec import (AdjacencyModel, DomVariant, analyze, build_k_dominating_graph,
                    build_variant_graph, frozen_vertices, stuck_vertices)
from domrec.graph import cycle, path
from domrec.verify import find_induced, forbidden_jump_subgraphs

D = build_k_dominating_graph(path(3), 2)
rep = analyze(D)
print("D_2(P3) nodes:", [D.node_label(i) for i in range(len(D))])
print("edges:", D.edges, "component sizes:", rep.component_sizes)
for i in range(len(D)):
    print(f"  {D.node_label(i):8} stuck {{{D.base.format_set(stuck_vertices(D, i))}}}"
          f" frozen {{{D.base.format_set(frozen_vertices(D)[i])}}}")

G = cycle(7)
slide = build_variant_graph(G, DomVariant.GAMMA, AdjacencyModel.SLIDE)
jump = build_variant_graph(G, DomVariant.GAMMA, AdjacencyModel.JUMP)
print(f"C7 γ-sets: {len(slide)}; slide edges {len(slide.edges)}, jump edges {len(jump.edges)}")
print("slide components:", analyze(slide).component_sizes)
for name, P in forbidden_jump_subgraphs().items():
    print(f"  induced {name} in the jump graph:", find_induced(jump.as_graph(), P) is not None)
print(slide.to_dot().splitlines()[1])
