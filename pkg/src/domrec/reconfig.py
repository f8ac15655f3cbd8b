"""Reconfiguration graphs over families of vertex sets."""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass

from .errors import CardinalityMismatch, ParameterUndefinedOrInfinite
from .graph import Graph, _dot_quote, from_edge_list, iter_members, popcount
from .solvers import SetFamily, bb_optimal, is_finite
from .variants import DomVariant


class AdjacencyModel(enum.Enum):
    SLIDE = "slide"
    JUMP = "jump"
    ADD_REMOVE = "add-remove"


def _same_size(G: Graph, S, T) -> tuple[int, int]:
    S, T = G.set_mask(S), G.set_mask(T)
    if popcount(S) != popcount(T):
        raise CardinalityMismatch("reconfiguration steps compare sets of equal size")
    return S, T


def adjacent_slide(G: Graph, S, T) -> bool:
    """One member of ``S`` slides along an edge of ``G`` to give ``T``."""
    S, T = _same_size(G, S, T)
    diff = S ^ T
    if popcount(diff) != 2:
        return False
    u = (S & diff).bit_length() - 1
    v = (T & diff).bit_length() - 1
    return G.has_edge(u, v)


def adjacent_jump(S: int, T: int) -> bool:
    if popcount(S) != popcount(T):
        raise CardinalityMismatch("reconfiguration steps compare sets of equal size")
    return popcount(S ^ T) == 2


@dataclass(frozen=True)
class ReconfigGraph:
    base: Graph
    nodes: SetFamily
    edges: tuple[tuple[int, int], ...]
    model: AdjacencyModel

    def __len__(self) -> int:
        return len(self.nodes)

    def as_graph(self) -> Graph:
        """The reconfiguration graph as a plain :class:`Graph` on node indices."""
        return from_edge_list(len(self.nodes), self.edges)

    def neighbors(self, i: int) -> list[int]:
        return [b if a == i else a for a, b in self.edges if i in (a, b)]

    def node_label(self, i: int) -> str:
        return "{" + self.base.format_set(self.nodes.sets[i]) + "}"

    def to_dot(self, name: str = "R") -> str:
        lines = [f"graph {name} {{"]
        for i in range(len(self.nodes)):
            lines.append(f"  {i} [label={_dot_quote(self.node_label(i))}];")
        lines += [f"  {a} -- {b};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        G = self.base
        return json.dumps({
            "model": self.model.value,
            "nodes": [{"index": i, "vertices": sorted(iter_members(s)),
                       "labels": [G.label(v) for v in iter_members(s)]}
                      for i, s in enumerate(self.nodes.sets)],
            "edges": [list(e) for e in self.edges],
        }, indent=2)


def _pairwise_edges(G: Graph, sets: tuple[int, ...], model: AdjacencyModel) -> tuple:
    edges = []
    closed = G.closed
    for i, S in enumerate(sets):
        for j in range(i + 1, len(sets)):
            diff = S ^ sets[j]
            # popcount fast path before any adjacency test
            if model is AdjacencyModel.ADD_REMOVE:
                if diff & (diff - 1) == 0 and diff:
                    edges.append((i, j))
                continue
            if popcount(diff) != 2:
                continue
            if model is AdjacencyModel.JUMP:
                edges.append((i, j))
            else:
                u = (S & diff).bit_length() - 1
                v = (sets[j] & diff).bit_length() - 1
                if closed[u] >> v & 1:
                    edges.append((i, j))
    return tuple(edges)


def reconfiguration_graph(G: Graph, family: SetFamily, model: AdjacencyModel) -> ReconfigGraph:
    return ReconfigGraph(G, family, _pairwise_edges(G, family.sets, model), model)


def build_variant_graph(G: Graph, variant: DomVariant, model: AdjacencyModel,
                        family: SetFamily | None = None) -> ReconfigGraph:
    """Variant graph of ``G``: optimal sets joined by single slide or jump moves.

    ``family`` may be supplied to skip recomputing the optimal sets.
    """
    if model is AdjacencyModel.ADD_REMOVE:
        raise ValueError("add/remove adjacency is only used by build_k_dominating_graph")
    if family is None:
        value, family = bb_optimal(G, variant)
        if not is_finite(value):
            raise ParameterUndefinedOrInfinite(f"{variant.cli_name} is {value} on this graph")
    return reconfiguration_graph(G, family, model)


def k_dominating_sets(G: Graph, k: int) -> SetFamily:
    """All dominating sets with at most ``k`` vertices."""
    k = min(k, G.n)
    out = []

    def grow(inc: int, cover: int, last: int, size: int) -> None:
        if cover == G.full:
            out.append(inc)
        if size == k:
            return
        # cut: remaining picks cannot cover an undominated vertex whose neighbourhood is behind us
        later = G.full & ~((1 << (last + 1)) - 1)
        for u in iter_members(G.full & ~cover):
            if not G.closed[u] & later:
                return
        for w in iter_members(later):
            grow(inc | (1 << w), cover | G.closed[w], w, size + 1)

    grow(0, 0, -1, 0)
    return SetFamily(G, tuple(out))


def build_k_dominating_graph(G: Graph, k: int) -> ReconfigGraph:
    return reconfiguration_graph(G, k_dominating_sets(G, k), AdjacencyModel.ADD_REMOVE)


def _adjacency_lists(R: ReconfigGraph) -> list[list[int]]:
    nbrs: list[list[int]] = [[] for _ in range(len(R.nodes))]
    for a, b in R.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    return nbrs


def components(R: ReconfigGraph) -> list[list[int]]:
    nbrs = _adjacency_lists(R)
    seen = [False] * len(nbrs)
    comps = []
    for s in range(len(nbrs)):
        if seen[s]:
            continue
        seen[s] = True
        comp, q = [s], deque([s])
        while q:
            v = q.popleft()
            for u in nbrs[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    q.append(u)
        comps.append(sorted(comp))
    return comps


def stuck_vertices(R: ReconfigGraph, node: int) -> int:
    """Members of node's set that every neighbouring set also contains."""
    S = R.nodes.sets[node]
    for j in R.neighbors(node):
        S &= R.nodes.sets[j]
    return S


def frozen_vertices(R: ReconfigGraph) -> dict[int, int]:
    out = {}
    for comp in components(R):
        common = R.base.full
        for i in comp:
            common &= R.nodes.sets[i]
        for i in comp:
            out[i] = common
    return out


@dataclass(frozen=True)
class ConnectivityReport:
    component_count: int
    component_sizes: tuple[int, ...]
    diameters: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def analyze(R: ReconfigGraph) -> ConnectivityReport:
    nbrs = _adjacency_lists(R)
    comps = components(R)
    diameters = []
    for comp in comps:
        diam = 0
        for s in comp:
            dist = {s: 0}
            q = deque([s])
            while q:
                v = q.popleft()
                for u in nbrs[v]:
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        q.append(u)
            diam = max(diam, max(dist.values()))
        diameters.append(diam)
    return ConnectivityReport(len(comps), tuple(len(c) for c in comps), tuple(diameters),
                              tuple(tuple(c) for c in comps))

