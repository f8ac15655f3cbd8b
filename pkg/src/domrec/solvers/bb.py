"""Branch-and-bound engine returning the optimum and *every* optimal set.

Minimising variants are searched with a hitting-constraint scheme.  A node is
a pair ``(inc, exc)`` of included and excluded vertices.  Each violated
requirement of the variant is a *constraint*: a candidate mask that the final
set must intersect (an undominated vertex needs one of ``N[u]``, an
unseparated pair needs one of ``N[u] △ N[w]``, ...).  The node branches on the
constraint with the fewest candidates ``c1..cr``; child ``i`` includes ``ci``
and excludes ``c1..c(i-1)``, so subtrees are disjoint and every optimal set is
reached exactly once.  A node whose included set satisfies the variant is a
leaf.  Disjoint constraints give the lower bound; pruning is strict
(``bound > best``) so ties survive.

Pendant forcing needs no special case: a pendant ``y`` with support ``x``
yields the two-candidate constraint ``{x, y}``, which the fewest-candidates
rule branches on first, and identification collisions inside a gadget turn
into unit constraints that propagate immediately.

Maximising variants walk hereditary families (irredundant, independent) in
canonical order with an ``|S| + |extensions|`` upper bound.
"""

from __future__ import annotations

import warnings

from ..errors import InstanceTooLarge
from ..graph import Graph, components_of, iter_members, popcount
from ..variants import DomVariant
from .brute import undefined_guard
from .family import INFINITE, UNDEFINED, ParamValue, SetFamily

ENUMERATION_LIMIT = 40

_DOMINATION = 1
_OPEN = 2
_IDENTIFY = 4
_LOCATE = 8
_CONNECT = 16
_INDEPENDENT = 32

_RULES = {
    DomVariant.GAMMA: _DOMINATION,
    DomVariant.TOTAL: _OPEN,
    DomVariant.CONNECTED: _DOMINATION | _CONNECT,
    DomVariant.ID_CODE: _DOMINATION | _IDENTIFY,
    DomVariant.LOC_DOM: _DOMINATION | _LOCATE,
    DomVariant.LOC_TOTAL: _OPEN | _LOCATE,
    DomVariant.INDEP_DOM: _DOMINATION | _INDEPENDENT,
}


class _HittingSearch:
    def __init__(self, G: Graph, rules: int):
        self.G = G
        self.rules = rules
        self.closed = G.closed
        self.adj = G.adj
        self.best = G.n + 1
        self.found: list[int] = []

    def constraints(self, inc: int, exc: int) -> list[int]:
        """Candidate masks of the violated constraints at this node.

        Domination (or open-neighbourhood) constraints are listed alone while
        any exist; separation and connectivity constraints only once the
        included set dominates, since undominated vertices share the empty code.
        """
        G, closed, adj, rules = self.G, self.closed, self.adj, self.rules
        free = ~exc
        out = []
        if rules & _DOMINATION:
            cover = 0
            for v in iter_members(inc):
                cover |= closed[v]
            for u in iter_members(G.full & ~cover):
                out.append(closed[u] & free)
        if rules & _OPEN:
            opened = 0
            for v in iter_members(inc):
                opened |= adj[v]
            for u in iter_members(G.full & ~opened):
                out.append(adj[u] & free)
        if out:
            return out
        if rules & (_IDENTIFY | _LOCATE):
            groups: dict[int, list[int]] = {}
            locate = rules & _LOCATE
            for v in range(G.n):
                if locate and inc >> v & 1:
                    continue
                groups.setdefault(closed[v] & inc, []).append(v)
            for vs in groups.values():
                if len(vs) < 2:
                    continue
                for i, u in enumerate(vs):
                    for w in vs[i + 1:]:
                        diff = closed[u] ^ closed[w]
                        if locate:
                            diff |= (1 << u) | (1 << w)
                        out.append(diff & free)
        if rules & _CONNECT and not out:
            comps = components_of(G, inc)
            if len(comps) > 1:
                for comp in comps:
                    reach = 0
                    for v in iter_members(comp):
                        reach |= adj[v]
                    out.append(reach & ~inc & free)
                out.sort(key=popcount)
                out = out[:1]
        return out

    @staticmethod
    def packing_bound(cons: list[int]) -> int:
        used = 0
        count = 0
        for cand in sorted(cons, key=popcount):
            if not cand & used:
                used |= cand
                count += 1
        return count

    def include(self, inc: int, exc: int, v: int) -> tuple[int, int]:
        inc |= 1 << v
        if self.rules & _INDEPENDENT:
            exc |= self.adj[v]
        return inc, exc

    def run(self, inc: int = 0, exc: int = 0) -> None:
        cons = self.constraints(inc, exc)
        size = popcount(inc)
        if not cons:
            if size < self.best:
                self.best = size
                self.found = [inc]
            elif size == self.best:
                self.found.append(inc)
            return
        if any(c == 0 for c in cons):
            return
        if size + self.packing_bound(cons) > self.best:
            return
        cand = min(cons, key=lambda c: (popcount(c), c))
        for v in iter_members(cand):
            child_inc, child_exc = self.include(inc, exc, v)
            self.run(child_inc, child_exc)
            exc |= 1 << v


class _PairedSearch:
    """Grow the set one matched edge at a time; revisit-free via a memo of visited sets."""

    def __init__(self, G: Graph):
        self.G = G
        self.best = G.n + 1
        self.found: set[int] = set()
        self.seen: set[int] = set()

    def run(self, inc: int = 0) -> None:
        if inc in self.seen:
            return
        self.seen.add(inc)
        G = self.G
        cover = 0
        for v in iter_members(inc):
            cover |= G.closed[v]
        size = popcount(inc)
        if cover == G.full:
            if size < self.best:
                self.best = size
                self.found = {inc}
            elif size == self.best:
                self.found.add(inc)
            return
        cons = [G.closed[u] for u in iter_members(G.full & ~cover)]
        need = _HittingSearch.packing_bound(cons)
        if size + need + (need & 1) > self.best:
            return
        target = min(cons, key=lambda c: (popcount(c & ~inc), c))
        for c in iter_members(target & ~inc):
            for d in iter_members(G.adj[c] & ~inc):
                self.run(inc | (1 << c) | (1 << d))


class _HereditarySearch:
    """Canonical-order walk over a hereditary family (each set generated once).

    ``kind`` selects the family: ``"irredundant"`` or ``"independent"``.  In
    ``"min-maximal"`` mode the walk collects the smallest *maximal* members;
    otherwise it collects members of largest size.
    """

    def __init__(self, G: Graph, kind: str, mode: str):
        self.G = G
        self.kind = kind
        self.mode = mode
        self.best = G.n + 1 if mode == "min-maximal" else -1
        self.found: list[int] = []

    def extensions(self, inc: int, once: int, twice: int, candidates: int) -> int:
        """Members ``w`` of ``candidates`` for which ``inc + w`` stays in the family."""
        G = self.G
        out = 0
        if self.kind == "independent":
            blocked = 0
            for v in iter_members(inc):
                blocked |= G.adj[v]
            return candidates & ~blocked & ~inc
        private = once & ~twice
        for w in iter_members(candidates & ~inc):
            nw = G.closed[w]
            if not nw & ~once:
                continue
            if all(G.closed[u] & private & ~nw for u in iter_members(inc)):
                out |= 1 << w
        return out

    def record(self, inc: int, size: int, better) -> None:
        if better(size):
            self.best = size
            self.found = [inc]
        elif size == self.best:
            self.found.append(inc)

    def run(self, inc: int = 0, once: int = 0, twice: int = 0, last: int = -1) -> None:
        G = self.G
        size = popcount(inc)
        later = G.full & ~((1 << (last + 1)) - 1)
        ext_later = self.extensions(inc, once, twice, later)
        if self.mode == "min-maximal":
            if size > self.best:
                return
            if not self.extensions(inc, once, twice, G.full & ~later) and not ext_later:
                self.record(inc, size, lambda s: s < self.best)
                return
            if size >= self.best:
                return
        else:
            if size + popcount(ext_later) < self.best:
                return
            self.record(inc, size, lambda s: s > self.best)
        for w in iter_members(ext_later):
            nw = G.closed[w]
            self.run(inc | (1 << w), once | nw, twice | (once & nw), w)


class _UpperDominationSearch:
    """Inclusion/exclusion over vertices in index order for minimal dominating sets.

    A branch dies when an included vertex has no private neighbour left, or
    when a vertex whose whole closed neighbourhood is decided stays
    undominated.  With ``bounded`` set, branches that cannot reach the
    incumbent size are cut and only largest sets are kept.
    """

    def __init__(self, G: Graph, bounded: bool):
        self.G = G
        self.bounded = bounded
        self.best = -1
        self.found: list[int] = []
        n = G.n
        # settled[i]: vertices whose closed neighbourhood lies in 0..i-1
        self.settled = [0] * (n + 1)
        for v in range(n):
            top = max(iter_members(G.closed[v]))
            for i in range(top + 1, n + 1):
                self.settled[i] |= 1 << v

    def run(self, i: int = 0, inc: int = 0, once: int = 0, twice: int = 0) -> None:
        G = self.G
        if self.settled[i] & ~once:
            return
        private = once & ~twice
        for u in iter_members(inc):
            if not G.closed[u] & private:
                return
        if i == G.n:
            size = popcount(inc)
            if not self.bounded:
                self.found.append(inc)
            elif size > self.best:
                self.best = size
                self.found = [inc]
            elif size == self.best:
                self.found.append(inc)
            return
        if self.bounded:
            room = 0
            for w in range(i, G.n):
                nw = G.closed[w]
                if nw & ~once and all(G.closed[u] & private & ~nw for u in iter_members(inc)):
                    room += 1
            if popcount(inc) + room < self.best:
                return
        nw = G.closed[i]
        if nw & ~once:
            self.run(i + 1, inc | (1 << i), once | nw, twice | (once & nw))
        self.run(i + 1, inc, once, twice)


def enumerate_minimal_dominating(G: Graph) -> SetFamily:
    """All minimal dominating sets of ``G``."""
    if G.n > ENUMERATION_LIMIT:
        warnings.warn(f"enumerating minimal dominating sets on {G.n} vertices", InstanceTooLarge,
                      stacklevel=2)
    search = _UpperDominationSearch(G, bounded=False)
    search.run()
    return SetFamily(G, tuple(search.found))


def bb_optimal(G: Graph, variant: DomVariant) -> tuple[ParamValue, SetFamily]:
    """Same contract as :func:`brute_force_optimal`, computed by branch and bound."""
    if undefined_guard(G, variant):
        return UNDEFINED, SetFamily(G, ())
    if variant in _RULES:
        search = _HittingSearch(G, _RULES[variant])
        search.run()
        if not search.found:
            return INFINITE, SetFamily(G, ())
        return search.best, SetFamily(G, tuple(search.found))
    if variant is DomVariant.PAIRED:
        search = _PairedSearch(G)
        search.run()
        return search.best, SetFamily(G, tuple(search.found))
    if variant is DomVariant.UPPER_GAMMA:
        search = _UpperDominationSearch(G, bounded=True)
        search.run()
        return search.best, SetFamily(G, tuple(search.found))
    if variant is DomVariant.IR:
        search = _HereditarySearch(G, "irredundant", "min-maximal")
    elif variant is DomVariant.UPPER_IR:
        search = _HereditarySearch(G, "irredundant", "max")
    elif variant is DomVariant.INDEPENDENCE:
        search = _HereditarySearch(G, "independent", "max")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    search.run()
    return search.best, SetFamily(G, tuple(search.found))


def parameter(G: Graph, variant: DomVariant) -> ParamValue:
    return bb_optimal(G, variant)[0]
