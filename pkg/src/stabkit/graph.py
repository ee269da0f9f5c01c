"""Simple undirected graphs over opaque labels, with bit-set vertex sets.

Vertices are mapped to dense indices ``0..d-1`` in declaration order.  Vertex
sets travel through the public API as ``frozenset`` of labels; the ``*_mask``
helpers work on integer bit masks over the canonical order and are what the
enumeration code uses internally.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Iterator, Sequence
from pathlib import Path

from .errors import InputError, ParseError

Label = Hashable
VertexSet = frozenset
Edge = tuple[Label, Label]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph.

    ``vertices`` fixes the canonical order.  ``edge_indices`` holds sorted
    ``(i, j)`` index pairs with ``i < j`` and ``adj[i]`` is the neighbour
    bit mask of vertex ``i``.
    """

    __slots__ = ("vertices", "edge_indices", "adj", "_index", "_hash")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[Edge] = ()) -> None:
        verts = tuple(vertices)
        index: dict[Label, int] = {}
        for i, v in enumerate(verts):
            if v in index:
                raise InputError(f"duplicate vertex {v!r}")
            index[v] = i
        pairs: set[tuple[int, int]] = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge must be a pair, got {e!r}") from None
            if u not in index or v not in index:
                raise InputError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            i, j = index[u], index[v]
            if i == j:
                raise InputError(f"self-loop at {u!r}")
            key = (i, j) if i < j else (j, i)
            if key in pairs:
                raise InputError(f"duplicate edge {u!r}-{v!r}")
            pairs.add(key)
        adj = [0] * len(verts)
        for i, j in pairs:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.vertices: tuple[Label, ...] = verts
        self.edge_indices: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        self.adj: tuple[int, ...] = tuple(adj)
        self._index = index
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[Label] = ()) -> Graph:
        """Build a graph whose vertex order is first appearance (declared vertices first)."""
        edges = list(edges)
        order: dict[Label, None] = dict.fromkeys(vertices)
        for u, v in edges:
            order.setdefault(u)
            order.setdefault(v)
        return cls(order, edges)

    @classmethod
    def from_indices(cls, vertices: Sequence[Label], pairs: Iterable[tuple[int, int]]) -> Graph:
        return cls(vertices, ((vertices[i], vertices[j]) for i, j in pairs))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edge_indices)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[j]) for i, j in self.edge_indices)

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise InputError(f"unknown vertex {label!r}") from None

    def __contains__(self, label: object) -> bool:
        try:
            return label in self._index
        except TypeError:
            return False

    def mask(self, labels: Iterable[Label]) -> int:
        out = 0
        for v in labels:
            out |= 1 << self.index(v)
        return out

    def labels(self, mask: int) -> frozenset:
        vs = self.vertices
        return frozenset(vs[i] for i in iter_bits(mask))

    def ordered(self, mask: int) -> list[Label]:
        vs = self.vertices
        return [vs[i] for i in iter_bits(mask)]

    def sort_labels(self, labels: Iterable[Label]) -> list[Label]:
        return sorted(labels, key=self.index)

    def has_edge(self, u: Label, v: Label) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def degree(self, v: Label) -> int:
        return popcount(self.adj[self.index(v)])

    def edge_key(self, u: Label, v: Label) -> tuple[int, int]:
        i, j = self.index(u), self.index(v)
        if not self.adj[i] >> j & 1:
            raise InputError(f"{u!r}-{v!r} is not an edge")
        return (i, j) if i < j else (j, i)

    def canonical_edge(self, u: Label, v: Label) -> Edge:
        i, j = self.edge_key(u, v)
        return (self.vertices[i], self.vertices[j])

    def induced_mask(self, mask: int) -> Graph:
        keep = list(iter_bits(mask))
        pos = {i: k for k, i in enumerate(keep)}
        pairs = [(pos[i], pos[j]) for i, j in self.edge_indices if i in pos and j in pos]
        return Graph.from_indices([self.vertices[i] for i in keep], pairs)

    def induced(self, labels: Iterable[Label]) -> Graph:
        return self.induced_mask(self.mask(labels))

    def without_edges(self, edge_keys: Iterable[tuple[int, int]]) -> Graph:
        drop = set(edge_keys)
        return Graph.from_indices(self.vertices, (e for e in self.edge_indices if e not in drop))

    def relabel(self, mapping) -> Graph:
        return Graph([mapping(v) for v in self.vertices], ((mapping(u), mapping(v)) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_indices == other.edge_indices

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edge_indices))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- mask-level primitives -------------------------------------------------


def neighbors_mask(g: Graph, mask: int) -> int:
    out = 0
    adj = g.adj
    for i in iter_bits(mask):
        out |= adj[i]
    return out


def components_mask(g: Graph, mask: int) -> list[int]:
    """Components of the induced subgraph, ordered by smallest member."""
    adj = g.adj
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= adj[i]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(g: Graph, mask: int) -> bool:
    return mask != 0 and len(components_mask(g, mask)) == 1


def two_coloring_mask(g: Graph, mask: int) -> dict[int, int] | None:
    """Proper 2-colouring of the induced subgraph, or ``None`` if it has an odd cycle."""
    adj = g.adj
    color: dict[int, int] = {}
    for start in iter_bits(mask):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in iter_bits(adj[u] & mask):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite_mask(g: Graph, mask: int) -> bool:
    return two_coloring_mask(g, mask) is not None


def is_independent_mask(g: Graph, mask: int) -> bool:
    adj = g.adj
    return all(not (adj[i] & mask) for i in iter_bits(mask))


def bridge_keys(g: Graph) -> list[tuple[int, int]]:
    """Cut edges of every component (Tarjan low-link, iterative)."""
    n = g.n
    adj_lists = [list(iter_bits(a)) for a in g.adj]
    disc = [-1] * n
    low = [0] * n
    out: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj_lists[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj_lists[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] > disc[p]:
                    out.append((p, u) if p < u else (u, p))
    return sorted(out)


def two_edge_components_mask(g: Graph) -> list[int]:
    """Vertex masks of the 2-edge-connected components (bridges removed)."""
    return components_mask(g.without_edges(bridge_keys(g)), g.full_mask)


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, by BFS from every vertex."""
    best: int | None = None
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                elif dist[w] == dist[u]:
                    # closed odd walk through s; exact when s lies on a shortest odd cycle
                    length = 2 * dist[u] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- label-level operations --------------------------------------------------


def _check_subset(g: Graph, s: Iterable[Label]) -> int:
    return g.mask(s)


def neighbors(g: Graph, s: Iterable[Label]) -> frozenset:
    """Open neighbourhood: every vertex adjacent to some member of ``s``."""
    return g.labels(neighbors_mask(g, _check_subset(g, s)))


def is_independent(g: Graph, z: Iterable[Label]) -> bool:
    return is_independent_mask(g, _check_subset(g, z))


def connected_components(g: Graph, s: Iterable[Label] | None = None) -> list[frozenset]:
    mask = g.full_mask if s is None else _check_subset(g, s)
    return [g.labels(c) for c in components_mask(g, mask)]


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.full_mask)


def has_odd_cycle(g: Graph, s: Iterable[Label] | None = None) -> bool:
    mask = g.full_mask if s is None else _check_subset(g, s)
    if not is_connected_mask(g, mask):
        raise InputError("has_odd_cycle needs a nonempty connected vertex set")
    return two_coloring_mask(g, mask) is None


def bridges(g: Graph) -> frozenset:
    """Cut edges of a connected graph, as canonical ``(u, v)`` label pairs."""
    if not is_connected(g):
        raise InputError("graph is disconnected")
    return bridges_all(g)


def bridges_all(g: Graph) -> frozenset:
    vs = g.vertices
    return frozenset((vs[i], vs[j]) for i, j in bridge_keys(g))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise InputError("graph is disconnected")


def require_connected_nonbipartite(g: Graph) -> None:
    require_connected(g)
    if is_bipartite_mask(g, g.full_mask):
        raise InputError("graph is bipartite")


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment line; ``vertex u`` declares a vertex."""
    order: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] == "vertex":
            order.setdefault(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = parts
        if u == v:
            raise ParseError(f"line {lineno}: self-loop {u!r}")
        order.setdefault(u)
        order.setdefault(v)
        edges.append((u, v))
    if not order:
        raise ParseError("empty graph")
    try:
        return Graph(order, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def read_edge_list(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_edge_list(text)


def format_label(label: Label) -> str:
    """Text form of a label; replication copies ``(v, k)`` print as ``v.k``."""
    if isinstance(label, tuple) and len(label) == 2 and isinstance(label[1], int):
        return f"{format_label(label[0])}.{label[1]}"
    return str(label)


def format_edge_list(g: Graph) -> str:
    # declaring every vertex up front pins the canonical order on re-read
    lines = [f"vertex {format_label(v)}" for v in g.vertices]
    lines.extend(f"{format_label(u)} {format_label(v)}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
