"""Gadgets and the realizability constructions.

Vertex numbering is fixed and part of the public contract:

* Connelly: ``H`` at ``0..n-1``, then ``a, b, c, c1, c2`` (extra pendants on
  ``c`` follow when multiplied).
* ID: ``H``, then ``C_1, C_1*, ..., C_n, C_n*`` (7 vertices each, in the order
  ``x1 x2 x3 x4 y1 y2 y3``), then ``a, b, C_a, C_b``.
* Locating: same layout with Bull gadgets (``x1 x2 x3 y1 y2``).
* Upper: ``H``, then ``Z_1, ..., Z_n, Z*`` (``z x1 x2 x3 y1 y2 y3``).

Copies added by :func:`multiply` are appended after the base layout.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .errors import EmptyHost, UnsupportedKind, VertexOutOfRange
from .graph import Graph, disjoint_union, from_edge_list
from .variants import DomVariant


class GadgetKind(enum.Enum):
    C_GADGET = "C"
    BULL = "bull"
    Z_GADGET = "Z"


_GADGETS = {
    # cycle x1x2x3x4 with pendants on x1, x2, x3
    GadgetKind.C_GADGET: (
        ["x1", "x2", "x3", "x4", "y1", "y2", "y3"],
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 1), (6, 2)],
        0,
    ),
    # triangle x1x2x3 with pendants on x1, x2
    GadgetKind.BULL: (
        ["x1", "x2", "x3", "y1", "y2"],
        [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1)],
        0,
    ),
    # z on triangle x1x2x3, matched to triangle y1y2y3
    GadgetKind.Z_GADGET: (
        ["z", "x1", "x2", "x3", "y1", "y2", "y3"],
        [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3),
         (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)],
        1,
    ),
}


@dataclass(frozen=True)
class Gadget:
    kind: GadgetKind
    graph: Graph
    attachment: int


def make_gadget(kind: GadgetKind) -> Gadget:
    labels, edges, attachment = _GADGETS[kind]
    return Gadget(kind, from_edge_list(len(labels), edges, labels), attachment)


def attach(G: Graph, g: Gadget, host: int, labels: list[str] | None = None) -> Graph:
    """Disjoint union of ``G`` and the gadget plus the edge host–attachment.

    Gadget vertices are appended after those of ``G``.  ``labels`` renames the
    gadget's vertices in the result.
    """
    if not 0 <= host < G.n:
        raise VertexOutOfRange(f"host vertex {host} outside 0..{G.n - 1}")
    part = g.graph if labels is None else Graph(g.graph.n, g.graph.adj, labels)
    joined = disjoint_union(G, part)
    return from_edge_list(joined.n, joined.edges() + [(host, G.n + g.attachment)], joined.labels)


@dataclass(frozen=True)
class Construction:
    """A constructed graph together with its provenance.

    ``expected_value`` is the optimum the construction is designed to realise
    and ``variants`` lists the parameters it targets.
    """

    kind: str
    host: Graph
    graph: Graph
    h_vertices: tuple[int, ...]
    special: dict[str, int] = field(default_factory=dict)
    gadgets: tuple[tuple[str, int], ...] = ()
    expected_value: int = 0
    variants: tuple[DomVariant, ...] = ()

    def label_map(self) -> dict[str, int]:
        return {self.graph.label(v): v for v in range(self.graph.n)}

    def label_json(self) -> str:
        return json.dumps(self.label_map(), indent=2)

    def gadget_block(self, name: str) -> range:
        """Vertex range occupied by the gadget called ``name`` (e.g. ``"C_1*"``)."""
        size = {"connelly": 0, "id": 7, "locating": 5, "upper": 7}[self.kind]
        for gname, start in self.gadgets:
            if gname == name:
                return range(start, start + size)
        raise KeyError(name)


def _host_labels(H: Graph) -> list[str]:
    return [f"v{i + 1}" for i in range(H.n)]


def _check_host(H: Graph) -> None:
    if H.n < 1:
        raise EmptyHost("the host graph needs at least one vertex")


class _Builder:
    """Accumulates vertices, edges and labels for a construction."""

    def __init__(self, H: Graph):
        self.labels = _host_labels(H)
        self.edges = list(H.edges())
        self.gadgets: list[tuple[str, int]] = []

    def vertex(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def gadget(self, kind: GadgetKind, name: str, labeller, host: int) -> int:
        g = make_gadget(kind)
        start = len(self.labels)
        for local in g.graph.labels:
            self.labels.append(labeller(local))
        self.edges += [(start + u, start + v) for u, v in g.graph.edges()]
        if host is not None:
            self.edges.append((host, start + g.attachment))
        self.gadgets.append((name, start))
        return start

    def graph(self) -> Graph:
        return from_edge_list(len(self.labels), self.edges, self.labels)


def _sub(tag: str):
    """Label maker: ``x1`` -> ``x_{tag,1}``; trailing ``*`` marks starred copies."""
    base = tag.rstrip("*")
    mark = "*" * (len(tag) - len(base))

    def fmt(local: str) -> str:
        letter, idx = local[0], local[1:]
        if not base:
            return f"{letter}{mark}_{idx}" if idx else f"{letter}{mark}"
        if not idx:
            return f"{letter}{mark}_{base}"
        return f"{letter}{mark}_{{{base},{idx}}}"

    return fmt


def construct_connelly(H: Graph, pendants: int = 2) -> Construction:
    _check_host(H)
    b = _Builder(H)
    n = H.n
    va, vb, vc = b.vertex("a"), b.vertex("b"), b.vertex("c")
    for hub in (va, vb, vc):
        b.edges += [(hub, i) for i in range(n)]
    special = {"a": va, "b": vb, "c": vc}
    for k in range(pendants):
        p = b.vertex(f"c{k + 1}")
        b.edges.append((vc, p))
        special[f"c{k + 1}"] = p
    return Construction(
        "connelly", H, b.graph(), tuple(range(n)), special, (), 2,
        (DomVariant.GAMMA, DomVariant.IR, DomVariant.TOTAL, DomVariant.PAIRED,
         DomVariant.CONNECTED),
    )


def _forcing_construction(H: Graph, kind: GadgetKind, name: str, copies: int) -> Construction:
    _check_host(H)
    b = _Builder(H)
    n = H.n
    letter = "C" if kind is GadgetKind.C_GADGET else "B"
    for i in range(n):
        for c in range(copies):
            tag = f"{i + 1}" + "*" * c
            b.gadget(kind, f"{letter}_{tag}", _sub(tag), i)
    va, vb = b.vertex("a"), b.vertex("b")
    b.edges += [(va, i) for i in range(n)] + [(vb, i) for i in range(n)]
    b.gadget(kind, f"{letter}_a", _sub("a"), va)
    b.gadget(kind, f"{letter}_b", _sub("b"), vb)
    forced = 3 if kind is GadgetKind.C_GADGET else 2
    targets = ((DomVariant.ID_CODE,) if kind is GadgetKind.C_GADGET
               else (DomVariant.LOC_DOM, DomVariant.LOC_TOTAL))
    return Construction(
        name, H, b.graph(), tuple(range(n)), {"a": va, "b": vb}, tuple(b.gadgets),
        forced * len(b.gadgets) + 1, targets,
    )


def construct_id(H: Graph) -> Construction:
    return _forcing_construction(H, GadgetKind.C_GADGET, "id", 2)


def construct_locating(H: Graph, total: bool = False) -> Construction:
    """Bull-gadget construction; ``total`` is accepted for symmetry and changes nothing."""
    return _forcing_construction(H, GadgetKind.BULL, "locating", 2)


def construct_upper(H: Graph) -> Construction:
    _check_host(H)
    b = _Builder(H)
    n = H.n
    for i in range(n):
        b.gadget(GadgetKind.Z_GADGET, f"Z_{i + 1}", _sub(f"{i + 1}"), i)
    zstar = b.gadget(GadgetKind.Z_GADGET, "Z*", _sub("*"), None)
    b.edges += [(i, zstar) for i in range(n)]
    return Construction(
        "upper", H, b.graph(), tuple(range(n)), {"z*": zstar}, tuple(b.gadgets),
        3 * (n + 1) + 1, (DomVariant.UPPER_GAMMA,),
    )


def multiply(C: Construction, extra: int) -> Construction:
    """Attach ``extra`` more gadget copies, keeping the realised variant graph.

    ID/locating: ``extra`` more gadgets at every H-vertex.  Upper: ``extra``
    more Z copies at H-vertex 0.  Connelly: ``extra`` more pendants on ``c``.
    """
    if extra < 1:
        raise ValueError("extra must be at least 1")
    G = C.graph
    labels = list(G.labels)
    edges = list(G.edges())
    gadgets = list(C.gadgets)
    special = dict(C.special)
    if C.kind == "connelly":
        vc = C.special["c"]
        start = sum(1 for key in special if key.startswith("c") and key[1:].isdigit())
        for k in range(extra):
            labels.append(f"c{start + k + 1}")
            edges.append((vc, len(labels) - 1))
            special[f"c{start + k + 1}"] = len(labels) - 1
        value = C.expected_value
    elif C.kind in ("id", "locating", "upper"):
        kind = {"id": GadgetKind.C_GADGET, "locating": GadgetKind.BULL,
                "upper": GadgetKind.Z_GADGET}[C.kind]
        hosts = C.h_vertices if C.kind != "upper" else C.h_vertices[:1]
        letter = {"id": "C", "locating": "B", "upper": "Z"}[C.kind]
        g = make_gadget(kind)
        for i in hosts:
            have = sum(1 for name, _ in gadgets if name.rstrip("*") == f"{letter}_{i + 1}")
            for c in range(extra):
                tag = f"{i + 1}" + "*" * (have + c)
                fmt = _sub(tag)
                start = len(labels)
                labels += [fmt(x) for x in g.graph.labels]
                edges += [(start + u, start + v) for u, v in g.graph.edges()]
                edges.append((i, start + g.attachment))
                gadgets.append((f"{letter}_{tag}", start))
        per = {"id": 3, "locating": 2, "upper": 3}[C.kind]
        value = per * len(gadgets) + 1
    else:
        raise UnsupportedKind(f"cannot multiply construction of kind {C.kind!r}")
    return Construction(
        C.kind, C.host, from_edge_list(len(labels), edges, labels), C.h_vertices, special,
        tuple(gadgets), value, C.variants,
    )


def construct_for(variant: DomVariant, H: Graph) -> Construction:
    from .errors import NoConstructionForVariant

    if variant in (DomVariant.GAMMA, DomVariant.IR, DomVariant.TOTAL, DomVariant.PAIRED,
                   DomVariant.CONNECTED):
        return construct_connelly(H)
    if variant is DomVariant.ID_CODE:
        return construct_id(H)
    if variant in (DomVariant.LOC_DOM, DomVariant.LOC_TOTAL):
        return construct_locating(H, total=variant is DomVariant.LOC_TOTAL)
    if variant is DomVariant.UPPER_GAMMA:
        return construct_upper(H)
    raise NoConstructionForVariant(f"no realizability construction for {variant.cli_name}")
