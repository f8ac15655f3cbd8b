"""Membership predicates for the domination variants.

All predicates take a :class:`~domrec.graph.Graph` and a vertex set (bitmask or
iterable of vertices) and are pure functions.
"""

from __future__ import annotations

import enum

from .errors import VertexNotInSet
from .graph import Graph, components_of, iter_members, popcount


class DomVariant(enum.Enum):
    GAMMA = ("gamma", "γ", False)
    IR = ("ir", "ir", False)
    TOTAL = ("gamma-t", "γ_t", False)
    PAIRED = ("gamma-pr", "γ_pr", False)
    CONNECTED = ("gamma-c", "γ_c", False)
    ID_CODE = ("gamma-id", "γ^ID", False)
    LOC_DOM = ("gamma-l", "γ_L", False)
    LOC_TOTAL = ("gamma-tl", "γ_t^L", False)
    UPPER_GAMMA = ("upper", "Γ", True)
    UPPER_IR = ("upper-ir", "IR", True)
    INDEP_DOM = ("i", "i", False)
    INDEPENDENCE = ("alpha", "α", True)

    def __init__(self, cli_name: str, symbol: str, maximize: bool):
        self.cli_name = cli_name
        self.symbol = symbol
        self.maximize = maximize

    @classmethod
    def from_name(cls, name: str) -> "DomVariant":
        key = name.strip().lower()
        for v in cls:
            if key in (v.cli_name, v.name.lower()):
                return v
        raise KeyError(name)


def private_neighborhood(G: Graph, S, v: int) -> int:
    """pn[v, S]: closed neighbours of ``v`` not dominated by ``S - {v}``."""
    S = G.set_mask(S)
    if not S >> v & 1:
        raise VertexNotInSet(f"vertex {v} is not a member of the set")
    others = 0
    for u in iter_members(S & ~(1 << v)):
        others |= G.closed[u]
    return G.closed[v] & ~others


def intersection_set(G: Graph, S, v: int) -> int:
    """I_S(v) = N[v] ∩ S."""
    return G.closed[v] & G.set_mask(S)


def _cover_counts(G: Graph, S: int) -> tuple[int, int]:
    """(dominated at least once, dominated at least twice) by ``S``."""
    once = twice = 0
    for u in iter_members(S):
        twice |= once & G.closed[u]
        once |= G.closed[u]
    return once, twice


def is_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    cover = 0
    for u in iter_members(S):
        cover |= G.closed[u]
    return cover == G.full


def is_irredundant(G: Graph, S) -> bool:
    S = G.set_mask(S)
    once, twice = _cover_counts(G, S)
    private = once & ~twice
    # a closed neighbour of v dominated exactly once is dominated by v alone
    return all(G.closed[v] & private for v in iter_members(S))


def is_minimal_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    return is_dominating(G, S) and all(private_neighborhood(G, S, u) for u in iter_members(S))


def is_total_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    if not is_dominating(G, S):
        return False
    return all(G.adj[v] & S for v in iter_members(S))


def has_perfect_matching(G: Graph, S: int) -> bool:
    """Exact test for a perfect matching of ``G[S]`` (memoised on the remaining vertices)."""
    memo = {0: True}

    def solve(rest: int) -> bool:
        if rest in memo:
            return memo[rest]
        low = rest & -rest
        v = low.bit_length() - 1
        ok = False
        for u in iter_members(G.adj[v] & rest):
            if solve(rest & ~low & ~(1 << u)):
                ok = True
                break
        memo[rest] = ok
        return ok

    return popcount(S) % 2 == 0 and solve(S)


def is_paired_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    return is_dominating(G, S) and has_perfect_matching(G, S)


def is_connected_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    return S != 0 and is_dominating(G, S) and len(components_of(G, S)) == 1


def is_maximal_irredundant(G: Graph, S) -> bool:
    S = G.set_mask(S)
    if not is_irredundant(G, S):
        return False
    return not any(is_irredundant(G, S | (1 << w)) for w in iter_members(G.full & ~S))


def is_identifying_code(G: Graph, S) -> bool:
    S = G.set_mask(S)
    seen = set()
    for v in range(G.n):
        code = G.closed[v] & S
        if not code or code in seen:
            return False
        seen.add(code)
    return True


def is_locating_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    seen = set()
    for v in iter_members(G.full & ~S):
        code = G.closed[v] & S
        if not code or code in seen:
            return False
        seen.add(code)
    return True


def is_locating_total_dominating(G: Graph, S) -> bool:
    S = G.set_mask(S)
    return is_locating_dominating(G, S) and all(G.adj[v] & S for v in range(G.n))


def is_independent(G: Graph, S) -> bool:
    S = G.set_mask(S)
    return not any(G.adj[v] & S for v in iter_members(S))


def satisfies(G: Graph, S, variant: DomVariant) -> bool:
    """Dispatch to the predicate behind ``variant``.

    For the maximising variants this is the local condition (minimal
    dominating, maximal irredundant, independent); maximum cardinality is the
    solver's business.
    """
    S = G.set_mask(S)
    if variant is DomVariant.GAMMA:
        return is_dominating(G, S)
    if variant is DomVariant.IR or variant is DomVariant.UPPER_IR:
        return is_maximal_irredundant(G, S)
    if variant is DomVariant.TOTAL:
        return is_total_dominating(G, S)
    if variant is DomVariant.PAIRED:
        return is_paired_dominating(G, S)
    if variant is DomVariant.CONNECTED:
        return is_connected_dominating(G, S)
    if variant is DomVariant.ID_CODE:
        return is_identifying_code(G, S)
    if variant is DomVariant.LOC_DOM:
        return is_locating_dominating(G, S)
    if variant is DomVariant.LOC_TOTAL:
        return is_locating_total_dominating(G, S)
    if variant is DomVariant.UPPER_GAMMA:
        return is_minimal_dominating(G, S)
    if variant is DomVariant.INDEP_DOM:
        return is_independent(G, S) and is_dominating(G, S)
    if variant is DomVariant.INDEPENDENCE:
        return is_independent(G, S)
    raise ValueError(f"unknown variant {variant!r}")
