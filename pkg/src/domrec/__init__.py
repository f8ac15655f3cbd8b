"""Domination variants, their reconfiguration graphs, and realizability constructions."""

from .constructions import (Construction, Gadget, GadgetKind, attach, construct_connelly,
                            construct_for, construct_id, construct_locating, construct_upper,
                            make_gadget, multiply)
from .graph import (Graph, closed_neighborhood, from_edge_list, induced_subgraph, is_connected,
                    mask_of, members, parse_edge_list, parse_graph6, to_dot, to_edge_list,
                    to_graph6)
from .reconfig import (AdjacencyModel, ReconfigGraph, adjacent_jump, adjacent_slide, analyze,
                       build_k_dominating_graph, build_variant_graph, frozen_vertices,
                       stuck_vertices)
from .solvers import (INFINITE, UNDEFINED, SetFamily, bb_optimal, brute_force_optimal,
                      enumerate_minimal_dominating, parameter)
from .variants import DomVariant, satisfies
from .verify import Report, are_isomorphic, verify_realizability

__all__ = [
    "Construction", "Gadget", "GadgetKind", "attach", "construct_connelly", "construct_for",
    "construct_id", "construct_locating", "construct_upper", "make_gadget", "multiply", "Graph",
    "closed_neighborhood", "from_edge_list", "induced_subgraph", "is_connected", "mask_of",
    "members", "parse_edge_list", "parse_graph6", "to_dot", "to_edge_list", "to_graph6",
    "AdjacencyModel", "ReconfigGraph", "adjacent_jump", "adjacent_slide", "analyze",
    "build_k_dominating_graph", "build_variant_graph", "frozen_vertices", "stuck_vertices",
    "INFINITE", "UNDEFINED", "SetFamily", "bb_optimal", "brute_force_optimal",
    "enumerate_minimal_dominating", "parameter", "DomVariant", "satisfies", "Report",
    "are_isomorphic", "verify_realizability",
]

__version__ = "0.1.0"
