"""Isomorphism testing and end-to-end realizability checks."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

from .constructions import Construction, construct_for
from .errors import InstanceTooLarge, ParameterMismatch
from .graph import Graph, from_edge_list, iter_members, popcount
from .reconfig import AdjacencyModel, ReconfigGraph, build_variant_graph
from .solvers import bb_optimal, format_value
from .variants import DomVariant

ISOMORPHISM_LIMIT = 16


def _refine(G: Graph) -> list[tuple]:
    """Per-vertex invariant: degree plus the sorted degrees of its neighbours."""
    deg = [popcount(nb) for nb in G.adj]
    return [(deg[v], tuple(sorted(deg[u] for u in iter_members(G.adj[v])))) for v in range(G.n)]


def is_isomorphism(G1: Graph, G2: Graph, mapping: dict[int, int]) -> bool:
    if G1.n != G2.n or len(mapping) != G1.n or sorted(mapping.values()) != list(range(G2.n)):
        return False
    if G1.edge_count != G2.edge_count:
        return False
    return all(G2.has_edge(mapping[u], mapping[v]) for u, v in G1.edges())


def are_isomorphic(G1: Graph, G2: Graph) -> tuple[bool, dict[int, int] | None]:
    """Exact isomorphism test by backtracking; returns a verified bijection G1 -> G2."""
    if max(G1.n, G2.n) > ISOMORPHISM_LIMIT:
        warnings.warn(f"isomorphism search on {max(G1.n, G2.n)} vertices", InstanceTooLarge,
                      stacklevel=2)
    if G1.n != G2.n or G1.edge_count != G2.edge_count:
        return False, None
    inv1, inv2 = _refine(G1), _refine(G2)
    if sorted(inv1) != sorted(inv2):
        return False, None
    # most constrained first: rare invariants, then high degree
    freq: dict[tuple, int] = {}
    for x in inv1:
        freq[x] = freq.get(x, 0) + 1
    order = sorted(range(G1.n), key=lambda v: (freq[inv1[v]], -inv1[v][0], v))
    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        for w in range(G2.n):
            if used >> w & 1 or inv2[w] != inv1[v]:
                continue
            if any(G1.has_edge(v, u) != G2.has_edge(w, mu) for u, mu in mapping.items()):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    if not extend(0):
        return False, None
    result = dict(sorted(mapping.items()))
    if not is_isomorphism(G1, G2, result):
        raise AssertionError("backtracking produced a non-isomorphism")
    return True, result


def find_induced(G: Graph, P: Graph) -> dict[int, int] | None:
    """An embedding of ``P`` as an induced subgraph of ``G``, or None."""
    if P.n > G.n:
        return None
    order = sorted(range(P.n), key=lambda v: -P.degree(v))
    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        for w in range(G.n):
            if used >> w & 1 or G.degree(w) < P.degree(v):
                continue
            if any(P.has_edge(v, u) != G.has_edge(w, mu) for u, mu in mapping.items()):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return dict(mapping) if extend(0) else None


def _join(A: Graph, B: Graph) -> Graph:
    edges = A.edges() + [(A.n + u, A.n + v) for u, v in B.edges()]
    edges += [(u, A.n + v) for u in range(A.n) for v in range(B.n)]
    return from_edge_list(A.n + B.n, edges)


def forbidden_jump_subgraphs() -> dict[str, Graph]:
    """Graphs that never occur induced in a jump-model γ-graph."""
    k2 = from_edge_list(2, [(0, 1)])
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    two_k1 = from_edge_list(2, [])
    k3_bar = from_edge_list(3, [])
    k2_k1 = from_edge_list(3, [(0, 1)])
    return {
        "K_{3,2}": _join(k3_bar, two_k1),
        "P3 v K2": _join(p3, k2),
        "(K2 u K1) v 2K1": _join(k2_k1, two_k1),
    }


@dataclass
class Report:
    variant: DomVariant
    model: AdjacencyModel
    host_n: int
    host_m: int
    graph_n: int
    graph_m: int
    value: int
    expected_value: int
    set_count: int
    isomorphic: bool
    witness: dict[int, int] | None
    sets: list[list[str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "variant": self.variant.cli_name,
            "model": self.model.value,
            "host": {"n": self.host_n, "m": self.host_m},
            "graph": {"n": self.graph_n, "m": self.graph_m},
            "value": self.value,
            "expected_value": self.expected_value,
            "set_count": self.set_count,
            "isomorphic": self.isomorphic,
            "witness": None if self.witness is None else {str(k): v for k, v in self.witness.items()},
            "sets": self.sets,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"variant      {self.variant.symbol} ({self.variant.cli_name}), {self.model.value} model",
            f"host H       n={self.host_n} m={self.host_m}",
            f"graph G      n={self.graph_n} m={self.graph_m}",
            f"value        {self.value} (expected {self.expected_value})",
            f"optimal sets {self.set_count}",
            f"G({self.variant.symbol}) ≅ H  {'yes' if self.isomorphic else 'NO'}",
        ]
        if self.witness is not None:
            lines.append("witness      " + ", ".join(f"v{k + 1}->{v}" for k, v in self.witness.items()))
        lines += [f"note         {x}" for x in self.notes]
        return "\n".join(lines)


def _natural_witness(C: Construction, R: ReconfigGraph) -> dict[int, int] | None:
    """Map H-vertex ``i`` to the unique node whose set contains it, if that is well defined."""
    witness = {}
    for i in C.h_vertices:
        hits = [k for k, S in enumerate(R.nodes.sets) if S >> i & 1]
        if len(hits) != 1:
            return None
        witness[i] = hits[0]
    return witness


def verify_construction(C: Construction, variant: DomVariant,
                        model: AdjacencyModel = AdjacencyModel.SLIDE) -> Report:
    """Solve, build the variant graph and compare it with the host of ``C``."""
    value, family = bb_optimal(C.graph, variant)
    if value != C.expected_value:
        raise ParameterMismatch(
            f"{variant.cli_name} = {format_value(value)} on the {C.kind} construction, "
            f"expected {C.expected_value}")
    R = build_variant_graph(C.graph, variant, model, family=family)
    H = C.host
    notes = []
    if len(family) != H.n:
        notes.append(f"{len(family)} optimal sets for a host on {H.n} vertices")
    witness = _natural_witness(C, R)
    if witness is not None and len(R.nodes) == H.n and is_isomorphism(H, R.as_graph(), witness):
        iso = True
    else:
        iso, witness = are_isomorphic(H, R.as_graph())
    return Report(
        variant, model, H.n, H.edge_count, C.graph.n, C.graph.edge_count, value,
        C.expected_value, len(family), iso, witness, family.as_labels(), notes,
    )


def verify_realizability(H: Graph, variant: DomVariant,
                         model: AdjacencyModel = AdjacencyModel.SLIDE) -> Report:
    return verify_construction(construct_for(variant, H), variant, model)


def verify_sweep(hosts: list[Graph], variants: list[DomVariant], workers: int = 1,
                 model: AdjacencyModel = AdjacencyModel.SLIDE) -> list[Report]:
    """Independent verifications over hosts × variants, optionally in worker processes.

    Results come back in input order regardless of scheduling.
    """
    jobs = [(H, v, model) for H in hosts for v in variants]
    if workers <= 1 or len(jobs) <= 1:
        return [verify_realizability(*job) for job in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, jobs))


def _run_job(job):
    return verify_realizability(*job)
