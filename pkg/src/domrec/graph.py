"""Simple undirected graphs over dense vertex indices, stored as neighbour bitmasks.

Vertex sets are plain Python ints used as bitmasks (bit ``v`` set means vertex
``v`` is a member).  Every public function that takes a vertex set also accepts
any iterable of vertex indices.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabel,
    EndpointOutOfRange,
    GraphError,
    MalformedHeader,
    NonCanonicalPadding,
    SelfLoop,
    TruncatedBody,
    UnsupportedSize,
    VertexOutOfRange,
)

MAX_VERTICES = 128

VertexSet = int


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.  Labels are
    decorative and ignored by equality and hashing.
    """

    __slots__ = ("n", "adj", "closed", "labels", "full")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0 or n > MAX_VERTICES:
            raise UnsupportedSize(f"graphs with {n} vertices are not supported (max {MAX_VERTICES})")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise EndpointOutOfRange(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if nb >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in iter_members(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("label count does not match vertex count")
            if len(set(labels)) != n:
                seen = set()
                dup = next(x for x in labels if x in seen or seen.add(x))
                raise DuplicateLabel(f"label {dup!r} used more than once")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "closed", tuple(nb | (1 << v) for v, nb in enumerate(adj)))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "full", full)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph, (self.n, self.adj, self.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_members(self.adj[v] & ((1 << v) - 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def vertices_of(self, *labels: str) -> int:
        """Bitmask of the vertices carrying the given labels."""
        return mask_of(self.index_of(x) for x in labels)

    def set_mask(self, S) -> int:
        """Coerce a bitmask or an iterable of vertices to a validated bitmask."""
        if isinstance(S, int):
            if S < 0 or S & ~self.full:
                raise VertexOutOfRange(f"vertex set {S:#x} has members outside 0..{self.n - 1}")
            return S
        m = 0
        for v in S:
            self._check(v)
            m |= 1 << v
        return m

    def format_set(self, S, use_labels: bool = True) -> str:
        verts = members(self.set_mask(S))
        if use_labels and self.labels is not None:
            return ",".join(self.labels[v] for v in verts)
        return ",".join(str(v) for v in verts)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise UnsupportedSize(f"graphs with {n} vertices are not supported (max {MAX_VERTICES})")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def closed_neighborhood(G: Graph, v: int) -> int:
    G._check(v)
    return G.closed[v]


def neighborhood_of_set(G: Graph, S) -> int:
    """Union of closed neighbourhoods of the members of ``S``."""
    cover = 0
    for v in iter_members(G.set_mask(S)):
        cover |= G.closed[v]
    return cover


def components_of(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by lowest vertex."""
    rest = G.full if within is None else within
    comps = []
    while rest:
        frontier = rest & -rest
        comp = frontier
        while frontier:
            grow = 0
            for v in iter_members(frontier):
                grow |= G.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    return len(components_of(G)) <= 1


def induced_subgraph(G: Graph, S) -> tuple[Graph, list[int]]:
    """Return ``(G[S], original)`` where ``original[i]`` is the index in ``G`` of new vertex ``i``."""
    verts = members(G.set_mask(S))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(mask_of(pos[u] for u in iter_members(G.adj[v]) if u in pos))
    labels = None if G.labels is None else [G.labels[v] for v in verts]
    return Graph(len(verts), adj, labels), verts


def relabel(G: Graph, labels: Sequence[str] | None) -> Graph:
    return Graph(G.n, G.adj, labels)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    adj = list(G.adj) + [nb << shift for nb in H.adj]
    labels = None
    if G.labels is not None or H.labels is not None:
        labels = [G.label(v) for v in range(G.n)] + [H.label(v) for v in range(H.n)]
    return Graph(G.n + H.n, adj, labels)


def add_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return from_edge_list(G.n, list(G.edges()) + list(edges), G.labels)


def eccentricities(G: Graph, within: int) -> dict[int, int]:
    """BFS eccentricity of each vertex inside the (connected) vertex set ``within``."""
    ecc = {}
    for s in iter_members(within):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for u in iter_members(G.adj[v] & within):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    q.append(u)
        ecc[s] = max(dist.values())
    return ecc


# ---------------------------------------------------------------- named graphs

def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def k4_minus_e() -> Graph:
    """The 2-fan: K4 without the edge v2v4 (0-based: without 1-3)."""
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def named_graph(name: str) -> Graph:
    """Parse names such as ``K4``, ``P3``, ``C5``, ``3K1`` and ``K4-e``."""
    import re

    key = name.strip().replace("−", "-")
    if key.lower() in ("k4-e", "2-fan"):
        return k4_minus_e()
    m = re.fullmatch(r"(\d+)K1", key)
    if m:
        return empty(int(m.group(1)))
    m = re.fullmatch(r"([KPC])(\d+)", key)
    if m:
        return {"K": complete, "P": path, "C": cycle}[m.group(1)](int(m.group(2)))
    raise GraphError(f"unknown graph name {name!r}")


# ---------------------------------------------------------------- graph6

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise UnsupportedSize(f"graph6 size header cannot hold {n}")


def to_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_size(G.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedHeader("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise MalformedHeader("graph6 characters must lie in the range '?'..'~'")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] != 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        raise MalformedHeader("graph6 headers beyond four bytes are not supported")
    if n > MAX_VERTICES:
        raise UnsupportedSize(f"graphs with {n} vertices are not supported (max {MAX_VERTICES})")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nchars:
        raise TruncatedBody(f"expected {nchars} body characters, got {len(body)}")
    if len(body) > nchars:
        raise MalformedHeader(f"expected {nchars} body characters, got {len(body)}")
    pad = nchars * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise NonCanonicalPadding("nonzero padding bits in graph6 body")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


# ---------------------------------------------------------------- edge-list text and DOT

def parse_edge_list(text: str) -> Graph:
    """Read the ``n`` line / ``u v`` lines format; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 1:
        raise MalformedHeader("edge list must start with a single vertex count")
    try:
        n = int(rows[0][0])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise MalformedHeader(str(exc)) from None
    if any(len(r) != 2 for r in rows[1:]):
        raise MalformedHeader("each edge line needs exactly two vertices")
    return from_edge_list(n, edges)


def to_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: Graph, name: str = "G", node_labels: Sequence[str] | None = None) -> str:
    if node_labels is None and G.labels is not None:
        node_labels = G.labels
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        if node_labels is not None:
            lines.append(f"  {v} [label={_dot_quote(node_labels[v])}];")
        else:
            lines.append(f"  {v};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
