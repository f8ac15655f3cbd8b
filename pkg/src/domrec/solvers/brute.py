"""Exhaustive subset scan used as the reference oracle.

Every subset of ``V(G)`` is represented by its bitmask and tested in numpy
blocks.  Predicates with no cheap vectorised form (perfect matching,
connectivity) are first narrowed by a vectorised necessary condition and then
checked one set at a time with the scalar predicates from
:mod:`domrec.variants`, cardinality layer by cardinality layer.
"""

from __future__ import annotations

import warnings

import numpy as np

from ..errors import InstanceTooLarge
from ..graph import Graph, components_of, is_connected
from ..variants import DomVariant, has_perfect_matching
from .family import INFINITE, UNDEFINED, ParamValue, SetFamily

BRUTE_FORCE_LIMIT = 24
BLOCK = 1 << 20


def _blocks(n: int):
    total = 1 << n
    for start in range(0, total, BLOCK):
        yield np.arange(start, min(total, start + BLOCK), dtype=np.int64)


def _bits(m: np.ndarray, n: int) -> list[np.ndarray]:
    return [((m >> v) & 1).astype(bool) for v in range(n)]


def _cover(G: Graph, bits, rows) -> np.ndarray:
    out = np.zeros(len(bits[0]) if bits else 0, dtype=np.int64)
    for v, b in enumerate(bits):
        out |= np.where(b, rows[v], 0)
    return out


def _irredundant(G: Graph, bits, count: int) -> np.ndarray:
    once = np.zeros(count, dtype=np.int64)
    twice = np.zeros(count, dtype=np.int64)
    for v, b in enumerate(bits):
        nb = np.where(b, G.closed[v], 0)
        twice |= once & nb
        once |= nb
    private = once & ~twice
    ok = np.ones(count, dtype=bool)
    for v, b in enumerate(bits):
        ok &= ~b | ((private & G.closed[v]) != 0)
    return ok


def _independent(G: Graph, m: np.ndarray, bits) -> np.ndarray:
    ok = np.ones(len(m), dtype=bool)
    for v, b in enumerate(bits):
        ok &= ~b | ((m & G.adj[v]) == 0)
    return ok


def _codes_distinct(codes: np.ndarray) -> np.ndarray:
    srt = np.sort(codes, axis=1)
    return ~np.any(srt[:, 1:] == srt[:, :-1], axis=1)


def _identifying(G: Graph, m: np.ndarray) -> np.ndarray:
    codes = np.stack([m & G.closed[v] for v in range(G.n)], axis=1)
    return np.all(codes != 0, axis=1) & _codes_distinct(codes)


def _locating(G: Graph, m: np.ndarray) -> np.ndarray:
    cols = []
    for v in range(G.n):
        inside = ((m >> v) & 1).astype(bool)
        # members of S get a private sentinel so they never collide
        cols.append(np.where(inside, (1 << 40) + v, m & G.closed[v]))
    codes = np.stack(cols, axis=1)
    return np.all(codes != 0, axis=1) & _codes_distinct(codes)


def _irredundant_table(G: Graph) -> np.ndarray:
    table = np.empty(1 << G.n, dtype=bool)
    for m in _blocks(G.n):
        table[m[0]:m[-1] + 1] = _irredundant(G, _bits(m, G.n), len(m))
    return table


def _prefilter(G: Graph, variant: DomVariant, irr_table) -> np.ndarray:
    """All masks passing a vectorised condition implied by ``variant``."""
    n = G.n
    kept = []
    for m in _blocks(n):
        bits = _bits(m, n)
        if variant in (DomVariant.IR, DomVariant.UPPER_IR):
            ok = irr_table[m]
        elif variant is DomVariant.INDEPENDENCE:
            ok = _independent(G, m, bits)
        elif variant in (DomVariant.TOTAL, DomVariant.PAIRED, DomVariant.LOC_TOTAL):
            ok = _cover(G, bits, G.adj) == G.full
        else:
            ok = _cover(G, bits, G.closed) == G.full
        if variant is DomVariant.UPPER_GAMMA:
            ok &= _irredundant(G, bits, len(m))
        elif variant is DomVariant.INDEP_DOM:
            ok &= _independent(G, m, bits)
        kept.append(m[ok])
    return np.concatenate(kept) if kept else np.zeros(0, dtype=np.int64)


def _layer_filter(G: Graph, variant: DomVariant, layer: np.ndarray, irr_table) -> np.ndarray:
    """Exact membership test on one cardinality layer of prefiltered masks."""
    if variant is DomVariant.ID_CODE:
        return layer[_identifying(G, layer)]
    if variant in (DomVariant.LOC_DOM, DomVariant.LOC_TOTAL):
        return layer[_locating(G, layer)]
    if variant in (DomVariant.IR, DomVariant.UPPER_IR):
        ok = np.ones(len(layer), dtype=bool)
        for w in range(G.n):
            outside = ((layer >> w) & 1) == 0
            ok &= ~(outside & irr_table[layer | (1 << w)])
        return layer[ok]
    if variant is DomVariant.PAIRED:
        return np.array([s for s in layer.tolist() if has_perfect_matching(G, s)], dtype=np.int64)
    if variant is DomVariant.CONNECTED:
        return np.array([s for s in layer.tolist() if s and len(components_of(G, s)) == 1],
                        dtype=np.int64)
    return layer


def undefined_guard(G: Graph, variant: DomVariant) -> bool:
    """True when the parameter is undefined on ``G``."""
    if variant in (DomVariant.TOTAL, DomVariant.PAIRED, DomVariant.LOC_TOTAL):
        return any(nb == 0 for nb in G.adj)
    if variant is DomVariant.CONNECTED:
        return G.n == 0 or not is_connected(G)
    return False


def brute_force_optimal(G: Graph, variant: DomVariant) -> tuple[ParamValue, SetFamily]:
    """Optimal value and every optimal set, by scanning all ``2**n`` subsets."""
    if G.n > BRUTE_FORCE_LIMIT:
        warnings.warn(f"brute force on {G.n} vertices scans 2^{G.n} subsets", InstanceTooLarge,
                      stacklevel=2)
    if undefined_guard(G, variant):
        return UNDEFINED, SetFamily(G, ())
    irr_table = None
    if variant in (DomVariant.IR, DomVariant.UPPER_IR):
        irr_table = _irredundant_table(G)
    masks = _prefilter(G, variant, irr_table)
    sizes = np.bitwise_count(masks)
    order = range(G.n, -1, -1) if variant.maximize else range(G.n + 1)
    for k in order:
        hits = _layer_filter(G, variant, masks[sizes == k], irr_table)
        if len(hits):
            return k, SetFamily(G, tuple(int(s) for s in hits))
    return INFINITE, SetFamily(G, ())


def brute_force_minimal_dominating(G: Graph) -> SetFamily:
    """Every minimal dominating set, by full subset scan."""
    if G.n > BRUTE_FORCE_LIMIT:
        warnings.warn(f"brute force on {G.n} vertices scans 2^{G.n} subsets", InstanceTooLarge,
                      stacklevel=2)
    masks = _prefilter(G, DomVariant.UPPER_GAMMA, None)
    return SetFamily(G, tuple(int(s) for s in masks))
