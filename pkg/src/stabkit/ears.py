"""Generalized ear decompositions, contraction, subdivision and the invariants phi, psi, nu*.

``phi(G)`` (minimum number of even ears) is computed through the contraction
characterization: the smallest edge set whose contraction leaves a
factor-critical graph has exactly ``phi + psi`` edges, every bridge lies in
it, and the count splits over the 2-edge-connected components.  The ear
decomposition search is an independent route to the same number and is what
produces optimal witnesses.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import _kernels
from .errors import DomainError, InputError, ResourceLimitError
from .graph import (
    Edge,
    Graph,
    Label,
    bridge_keys,
    components_mask,
    format_label,
    is_bipartite_mask,
    is_connected,
    is_connected_mask,
    iter_bits,
    popcount,
    require_connected,
    two_edge_components_mask,
)
from .limits import Limits, default_limits

INITIAL_CYCLE = "initial-cycle"
OPEN_EAR = "open-ear"
CLOSED_EAR = "closed-ear"
BRIDGE = "bridge"
KINDS = (INITIAL_CYCLE, OPEN_EAR, CLOSED_EAR, BRIDGE)


@dataclass(frozen=True)
class Ear:
    """One step of a generalized ear decomposition.

    ``path`` lists the vertices in traversal order; an initial cycle and a
    closed ear repeat their first vertex at the end.
    """

    path: tuple
    kind: str

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def parity(self) -> str:
        return "odd" if self.length % 2 else "even"

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    def edge_list(self) -> list[tuple[Label, Label]]:
        return list(zip(self.path, self.path[1:]))


@dataclass(frozen=True)
class EarDecomposition:
    ears: tuple[Ear, ...]
    ambient: Graph

    @property
    def even_count(self) -> int:
        """Even ears, bridges excluded (a bridge has one edge and is never even)."""
        return sum(1 for e in self.ears if e.kind != BRIDGE and e.is_even)

    @property
    def bridge_count(self) -> int:
        return sum(1 for e in self.ears if e.kind == BRIDGE)

    def __len__(self) -> int:
        return len(self.ears)

    def validate(self) -> None:
        """Raise ``AssertionError`` unless this is a generalized ear decomposition of ``ambient``."""
        g = self.ambient
        assert self.ears, "empty decomposition"
        first = self.ears[0]
        assert first.kind in (INITIAL_CYCLE, BRIDGE), "first ear must be a cycle or a bridge"
        seen_edges: set[tuple[int, int]] = set()
        built = 0
        for pos, ear in enumerate(self.ears):
            idx = [g.index(v) for v in ear.path]
            keys = []
            for a, b in zip(idx, idx[1:]):
                assert g.adj[a] >> b & 1, f"ear {pos}: {ear.path} uses a non-edge"
                keys.append((a, b) if a < b else (b, a))
            assert len(set(keys)) == len(keys), f"ear {pos} repeats an edge"
            assert not seen_edges & set(keys), f"ear {pos} reuses an edge"
            seen_edges.update(keys)
            if ear.kind == INITIAL_CYCLE:
                assert pos == 0 and idx[0] == idx[-1] and len(set(idx)) == len(idx) - 1 >= 3
                built = _bits(idx)
            elif ear.kind == BRIDGE:
                assert len(idx) == 2
                if pos == 0:
                    built = _bits(idx)
                else:
                    a, b = idx
                    assert (built >> a & 1) != (built >> b & 1), f"bridge {pos} must reach a new vertex"
                    built |= _bits(idx)
            else:
                assert pos > 0
                inner = idx[1:-1]
                assert built >> idx[0] & 1 and built >> idx[-1] & 1, f"ear {pos} endpoints not built"
                assert len(set(inner)) == len(inner) and not (_bits(inner) & built), f"ear {pos} reuses vertices"
                if ear.kind == OPEN_EAR:
                    assert idx[0] != idx[-1]
                else:
                    assert idx[0] == idx[-1] and len(inner) >= 2
                built |= _bits(inner)
        assert built == g.full_mask, "decomposition misses vertices"
        assert seen_edges == set(g.edge_indices), "decomposition misses edges"

    def to_json_obj(self) -> dict:
        return {
            "vertices": [format_label(v) for v in self.ambient.vertices],
            "ears": [
                {
                    "index": i,
                    "kind": e.kind,
                    "parity": e.parity,
                    "path": [format_label(v) for v in e.path],
                }
                for i, e in enumerate(self.ears)
            ],
            "evenEars": self.even_count,
            "bridges": self.bridge_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2)

    def to_dot(self) -> str:
        """Graphviz source; initial cycle red, odd ears black, even ears blue, bridges dashed."""
        lines = ["graph ears {"]
        for v in self.ambient.vertices:
            lines.append(f'  "{format_label(v)}";')
        for i, ear in enumerate(self.ears):
            if ear.kind == INITIAL_CYCLE:
                attrs = 'color="red"'
            elif ear.kind == BRIDGE:
                attrs = 'color="black", style="dashed"'
            elif ear.is_even:
                attrs = 'color="blue"'
            else:
                attrs = 'color="black"'
            for u, v in ear.edge_list():
                lines.append(f'  "{format_label(u)}" -- "{format_label(v)}" [{attrs}, label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        rows = []
        for i, e in enumerate(self.ears):
            path = " ".join(format_label(v) for v in e.path)
            rows.append(f"F{i}\t{e.kind}\t{e.parity}\t{path}")
        return "\n".join(rows) + "\n"


def _bits(idx: Iterable[int]) -> int:
    out = 0
    for i in idx:
        out |= 1 << i
    return out


def _ear_kind(path: list[int]) -> str:
    return CLOSED_EAR if path[0] == path[-1] else OPEN_EAR


def _path_to(parent: dict[int, int], end: int) -> list[int]:
    out = [end]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out[::-1]


def _shortest_cycle(g: Graph, mask: int, odd: bool, through: int | None = None) -> list[int] | None:
    """A shortest cycle (odd if asked) inside ``mask``; BFS from every candidate root."""
    best: list[int] | None = None
    roots = [through] if through is not None else list(iter_bits(mask))
    adj = g.adj
    for s in roots:
        dist = {s: 0}
        parent = {s: -1}
        order = deque([s])
        while order:
            u = order.popleft()
            for w in iter_bits(adj[u] & mask):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    order.append(w)
                    continue
                if w == parent[u]:
                    continue
                length = dist[u] + dist[w] + 1
                if odd and length % 2 == 0:
                    continue
                pu, pw = _path_to(parent, u), _path_to(parent, w)
                # the two tree paths must meet only at the root to form a simple cycle
                if set(pu[1:]) & set(pw[1:]):
                    continue
                cyc = pu + pw[::-1][:-1] + [s]
                if best is None or len(cyc) < len(best):
                    best = cyc
    return best


def _grow_component(g: Graph, comp: int, built: int, used: set[tuple[int, int]]) -> tuple[list[list[int]], int]:
    """Ears covering the bridgeless component ``comp`` once part of it is built."""
    ears: list[list[int]] = []
    adj = g.adj
    while True:
        pick = None
        for u in iter_bits(built & comp):
            for w in iter_bits(adj[u] & comp):
                key = (u, w) if u < w else (w, u)
                if key not in used:
                    pick = (u, w)
                    break
            if pick:
                break
        if pick is None:
            return ears, built
        u, w = pick
        if built >> w & 1:
            path = [u, w]
        else:
            parent = {w: -1}
            order = deque([w])
            end = None
            while order and end is None:
                x = order.popleft()
                for y in iter_bits(adj[x] & comp):
                    if x == w and y == u:
                        continue
                    if built >> y & 1:
                        end = (x, y)
                        break
                    if y not in parent:
                        parent[y] = x
                        order.append(y)
            assert end is not None, "component is not 2-edge-connected"
            path = [u] + _path_to(parent, end[0]) + [end[1]]
        for a, b in zip(path, path[1:]):
            used.add((a, b) if a < b else (b, a))
        built |= _bits(path)
        ears.append(path)


def generalized_ear_decomposition(g: Graph, require_odd_start: bool = False) -> EarDecomposition:
    """Some generalized ear decomposition (not necessarily optimal).

    The first ear is a shortest cycle (a shortest odd cycle when
    ``require_odd_start``), or a bridge when ``g`` is a tree.
    """
    require_connected(g)
    if g.m == 0:
        raise InputError("graph has no edges")
    bipartite = is_bipartite_mask(g, g.full_mask)
    if require_odd_start and bipartite:
        raise InputError("graph is bipartite; no odd initial cycle")
    bkeys = bridge_keys(g)
    bset = set(bkeys)
    comps = two_edge_components_mask(g)
    comp_of = {}
    for c in comps:
        for v in iter_bits(c):
            comp_of[v] = c

    ears: list[Ear] = []
    used: set[tuple[int, int]] = set()
    vs = g.vertices
    cyc = None
    for c in comps:
        if popcount(c) >= 3:
            cyc = _shortest_cycle(g, c, odd=require_odd_start)
            if cyc is not None:
                break
    if cyc is None:
        if require_odd_start:
            raise InputError("graph is bipartite; no odd initial cycle")
        a, b = bkeys[0]
        ears.append(Ear((vs[a], vs[b]), BRIDGE))
        used.add((a, b))
        built = (1 << a) | (1 << b)
        queue = deque([comp_of[a], comp_of[b]])
    else:
        ears.append(Ear(tuple(vs[i] for i in cyc), INITIAL_CYCLE))
        for a, b in zip(cyc, cyc[1:]):
            used.add((a, b) if a < b else (b, a))
        built = _bits(cyc)
        queue = deque([comp_of[cyc[0]]])
    done: set[int] = set()
    while queue:
        c = queue.popleft()
        if c in done:
            continue
        done.add(c)
        new_ears, built = _grow_component(g, c, built, used)
        ears.extend(Ear(tuple(vs[i] for i in p), _ear_kind(p)) for p in new_ears)
        for a, b in bkeys:
            if (a, b) in used:
                continue
            if built >> a & 1 and comp_of[a] == c:
                inner, outer = a, b
            elif built >> b & 1 and comp_of[b] == c:
                inner, outer = b, a
            else:
                continue
            used.add((a, b))
            built |= 1 << outer
            ears.append(Ear((vs[inner], vs[outer]), BRIDGE))
            queue.append(comp_of[outer])
    assert used == set(g.edge_indices) and bset <= used
    dec = EarDecomposition(tuple(ears), g)
    dec.validate()
    return dec


def ear_count(d: EarDecomposition) -> int:
    """Number of ears; equals ``|E| - |V| + psi + 1`` for every generalized decomposition."""
    g = d.ambient
    expected = g.m - g.n + len(bridge_keys(g)) + 1
    assert len(d.ears) == expected, (len(d.ears), expected)
    return expected


# -- contraction and subdivision ------------------------------------------------


def _edge_keys(g: Graph, f: Iterable[Edge]) -> list[tuple[int, int]]:
    return sorted({g.edge_key(u, v) for u, v in f})


def contract(g: Graph, f: Iterable[Edge]) -> Graph:
    """``G/F``: merge the ends of every edge of ``F``; loops and parallel edges are dropped.

    Each merged vertex keeps the label of its member that comes first in the
    canonical order.
    """
    keys = _edge_keys(g, f)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in keys:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = [v for v in range(g.n) if find(v) == v]
    vs = g.vertices
    edges = {tuple(sorted((find(a), find(b)))) for a, b in g.edge_indices}
    return Graph([vs[r] for r in reps], ((vs[a], vs[b]) for a, b in sorted(edges) if a != b))


def subdivide(g: Graph, f: Iterable[Edge]) -> Graph:
    """``G > F``: a cycle edge ``uv`` becomes ``u-w-v``; a bridge ``uv`` keeps ``uv`` and gains ``uw, wv``.

    New vertices are labelled ``"u~v"`` from the labels of the subdivided edge.
    """
    keys = _edge_keys(g, f)
    bset = set(bridge_keys(g))
    vs = g.vertices
    verts = list(vs)
    edges = [e for e in g.edges]
    drop = set()
    for a, b in keys:
        w = f"{format_label(vs[a])}~{format_label(vs[b])}"
        while w in g or w in verts:
            w += "'"
        verts.append(w)
        if (a, b) not in bset:
            drop.add((vs[a], vs[b]))
        edges.append((vs[a], w))
        edges.append((w, vs[b]))
    return Graph(verts, (e for e in edges if e not in drop))


# -- phi, psi ------------------------------------------------------------------


class CriticalMaking(NamedTuple):
    size: int
    witness: frozenset


def min_critical_making(g: Graph, limits: Limits | None = None) -> CriticalMaking:
    """Smallest edge set whose contraction is factor-critical, by ascending exhaustive search.

    Bridges belong to every such set, so they are fixed and only the other
    edges are searched, smallest sets first, lexicographic within a size.
    """
    limits = limits or default_limits()
    require_connected(g)
    bkeys = bridge_keys(g)
    bset = set(bkeys)
    edges = list(g.edge_indices)
    pos = {e: i for i, e in enumerate(edges)}
    forced = [pos[e] for e in bkeys]
    cands = [i for i, e in enumerate(edges) if e not in bset]
    extra = _kernels.min_contraction(g.n, edges, forced, cands, limits.max_subset_size)
    if extra is None:
        raise ResourceLimitError(
            f"no critical-making set with at most {limits.max_subset_size} non-bridge edges"
        )
    vs = g.vertices
    chosen = [edges[i] for i in forced] + [edges[i] for i in extra]
    return CriticalMaking(len(chosen), frozenset((vs[a], vs[b]) for a, b in chosen))


@lru_cache(maxsize=65536)
def _component_phi(n: int, edges: tuple[tuple[int, int], ...], max_extra: int) -> int | None:
    extra = _kernels.min_contraction(n, edges, [], list(range(len(edges))), max_extra)
    return None if extra is None else len(extra)


def phi_mask(g: Graph, mask: int, limits: Limits | None = None) -> int:
    """``phi`` of the induced subgraph: sum over its 2-edge-connected components."""
    limits = limits or default_limits()
    h = g.induced_mask(mask)
    total = 0
    for comp in two_edge_components_mask(h):
        if popcount(comp) < 3:
            continue
        keep = list(iter_bits(comp))
        loc = {v: k for k, v in enumerate(keep)}
        edges = tuple((loc[a], loc[b]) for a, b in h.edge_indices if a in loc and b in loc)
        val = _component_phi(len(keep), edges, limits.max_subset_size)
        if val is None:
            raise ResourceLimitError(
                f"phi of a {len(keep)}-vertex block exceeds max_subset_size={limits.max_subset_size}"
            )
        total += val
    return total


def phi_psi(g: Graph, limits: Limits | None = None) -> tuple[int, int]:
    """``(phi, psi)``; for a disconnected graph both add up over components."""
    return phi_mask(g, g.full_mask, limits), len(bridge_keys(g))


def nu_star_mask(g: Graph, mask: int, limits: Limits | None = None) -> int:
    if mask == 0:
        return 0
    comps = components_mask(g, mask)
    for c in comps:
        if is_bipartite_mask(g, c):
            raise DomainError("nu* needs every component to contain an odd cycle")
    h = g.induced_mask(mask)
    phi = phi_mask(h, h.full_mask, limits)
    psi = len(bridge_keys(h))
    value = Fraction(popcount(mask) + phi + psi - len(comps), 2)
    assert value.denominator == 1, "nu* must be an integer"
    return int(value)


def nu_star(g: Graph, w: Iterable[Label], limits: Limits | None = None) -> int:
    """``(|W| + phi + psi - t) / 2`` for the induced subgraph on ``W`` with ``t`` components."""
    return nu_star_mask(g, g.mask(w), limits)


# -- optimal decompositions ----------------------------------------------------


def _ears_from(g: Graph, built: int, limit_mask: int) -> dict[tuple[int, int], list[int]]:
    """All (internal vertex set, edge parity) pairs realisable by an ear on ``built``.

    Only ears with at least one internal vertex are listed; chords are
    appended at the very end of a decomposition.  Values are witness paths.
    """
    adj = g.adj
    free = limit_mask & ~built
    out: dict[tuple[int, int], list[int]] = {}
    # single internal vertex: needs two distinct attachments
    for x in iter_bits(free):
        att = adj[x] & built
        if popcount(att) >= 2:
            a = (att & -att).bit_length() - 1
            rest = att & ~(1 << a)
            b = (rest & -rest).bit_length() - 1
            out.setdefault((1 << x, 0), [a, x, b])
    # longer ears: walk through free vertices, remembering (last, visited, parity)
    parent: dict[tuple[int, int, int], tuple[int, int, int] | None] = {}
    stack = []
    for x in iter_bits(free):
        if adj[x] & built:
            st = (x, 1 << x, 1)
            parent[st] = None
            stack.append(st)
    order = []
    while stack:
        st = stack.pop()
        order.append(st)
        x, seen, par = st
        for y in iter_bits(adj[x] & free & ~seen):
            nxt = (y, seen | (1 << y), par ^ 1)
            if nxt not in parent:
                parent[nxt] = st
                stack.append(nxt)
    for st in sorted(order, key=lambda s: (popcount(s[1]), s[1], s[2], s[0])):
        x, seen, par = st
        if seen == 1 << x or not adj[x] & built:
            continue
        key = (seen, par ^ 1)
        if key in out:
            continue
        chain = []
        cur: tuple[int, int, int] | None = st
        while cur is not None:
            chain.append(cur[0])
            cur = parent[cur]
        chain.reverse()
        a_mask = adj[chain[0]] & built
        b_mask = adj[chain[-1]] & built
        a = (a_mask & -a_mask).bit_length() - 1
        b = (b_mask & -b_mask).bit_length() - 1
        out[key] = [a] + chain + [b]
    return out


def _cycles(g: Graph, limit_mask: int, through: int | None) -> dict[tuple[int, int], list[int]]:
    """(vertex set, parity) of simple cycles inside ``limit_mask`` with witness closed paths."""
    adj = g.adj
    out: dict[tuple[int, int], list[int]] = {}
    roots = [through] if through is not None else list(iter_bits(limit_mask))
    for s in roots:
        allowed = limit_mask if through is not None else limit_mask & ~((1 << s) - 1)
        parent: dict[tuple[int, int, int], tuple[int, int, int] | None] = {}
        start = (s, 1 << s, 0)
        parent[start] = None
        stack = [start]
        found = []
        while stack:
            st = stack.pop()
            x, seen, par = st
            if popcount(seen) >= 3 and adj[x] >> s & 1:
                found.append(st)
            for y in iter_bits(adj[x] & allowed & ~seen):
                nxt = (y, seen | (1 << y), par ^ 1)
                if nxt not in parent:
                    parent[nxt] = st
                    stack.append(nxt)
        for st in sorted(found, key=lambda s_: (popcount(s_[1]), s_[1], s_[2], s_[0])):
            key = (st[1], st[2] ^ 1)
            if key in out:
                continue
            chain = []
            cur: tuple[int, int, int] | None = st
            while cur is not None:
                chain.append(cur[0])
                cur = parent[cur]
            chain.reverse()
            out[key] = chain + [s]
    return out


class _OptimalSearch:
    """Minimum even-ear completion over built vertex sets of one bridgeless graph."""

    def __init__(self, g: Graph, mask: int) -> None:
        self.g = g
        self.mask = mask
        self.memo: dict[int, tuple[int, tuple[int, int] | None, list[int] | None]] = {}

    def best(self, built: int) -> int:
        hit = self.memo.get(built)
        if hit is not None:
            return hit[0]
        if built == self.mask:
            self.memo[built] = (0, None, None)
            return 0
        options = _ears_from(self.g, built, self.mask)
        if not options:
            raise InputError("graph is not 2-edge-connected")
        best_val = None
        best_key = None
        for key in sorted(options, key=lambda k: (k[1] == 0, k[0], k[1])):
            val = (key[1] == 0) + self.best(built | key[0])
            if best_val is None or val < best_val:
                best_val, best_key = val, key
                if val == 0:
                    break
        assert best_val is not None and best_key is not None
        self.memo[built] = (best_val, best_key, options[best_key])
        return best_val

    def ears(self, built: int) -> list[list[int]]:
        out = []
        while built != self.mask:
            self.best(built)
            _, key, path = self.memo[built]
            assert key is not None and path is not None
            out.append(path)
            built |= key[0]
        return out

    def solve(self, odd_start: bool, through: int | None) -> tuple[int, list[int], list[list[int]]]:
        cycles = _cycles(self.g, self.mask, through)
        best = None
        for key in sorted(cycles, key=lambda k: (k[1] == 0, k[0], k[1])):
            if odd_start and key[1] == 0:
                continue
            val = (key[1] == 0) + self.best(key[0])
            if best is None or val < best[0]:
                best = (val, key)
        if best is None:
            raise InputError("no admissible initial cycle")
        val, key = best
        return val, cycles[key], self.ears(key[0])


def _require_bridgeless(g: Graph, mask: int) -> None:
    h = g.induced_mask(mask)
    if not is_connected(h) or bridge_keys(h):
        raise InputError("graph is not 2-edge-connected")


def _component_ears(
    g: Graph, mask: int, odd_start: bool, through: int | None
) -> tuple[int, list[int], list[list[int]]]:
    return _OptimalSearch(g, mask).solve(odd_start, through)


def _chords(g: Graph, used: set[tuple[int, int]]) -> list[Ear]:
    vs = g.vertices
    return [Ear((vs[a], vs[b]), OPEN_EAR) for a, b in g.edge_indices if (a, b) not in used]


def _mark(used: set[tuple[int, int]], path: list[int]) -> None:
    for a, b in zip(path, path[1:]):
        used.add((a, b) if a < b else (b, a))


def optimal_decomposition_search(
    g: Graph, odd_start: bool = False, limits: Limits | None = None
) -> EarDecomposition:
    """Ear decomposition of a bridgeless graph with the fewest even ears.

    Exhaustive over built vertex sets; with ``odd_start`` only odd initial
    cycles are admitted.  Chords come last.
    """
    limits = limits or default_limits()
    if g.n > limits.max_vertices:
        raise ResourceLimitError(f"{g.n} vertices exceed max_vertices={limits.max_vertices}")
    _require_bridgeless(g, g.full_mask)
    if g.n < 3:
        raise InputError("graph has no cycle")
    if odd_start and is_bipartite_mask(g, g.full_mask):
        raise InputError("graph is bipartite; no odd initial cycle")
    _, cyc, paths = _component_ears(g, g.full_mask, odd_start, None)
    vs = g.vertices
    used: set[tuple[int, int]] = set()
    _mark(used, cyc)
    ears = [Ear(tuple(vs[i] for i in cyc), INITIAL_CYCLE)]
    for p in paths:
        _mark(used, p)
        ears.append(Ear(tuple(vs[i] for i in p), _ear_kind(p)))
    ears.extend(_chords(g, used))
    dec = EarDecomposition(tuple(ears), g)
    dec.validate()
    return dec


def optimal_generalized_decomposition(g: Graph, limits: Limits | None = None) -> EarDecomposition:
    """Optimal generalized decomposition of a connected non-bipartite graph, odd cycle first.

    Each bridgeless component is solved on its own; the one holding the
    start is required to open with an odd cycle and the others, entered
    through a bridge at ``x``, open with a closed ear at ``x``.
    """
    limits = limits or default_limits()
    require_connected(g)
    if is_bipartite_mask(g, g.full_mask):
        raise InputError("graph is bipartite")
    if g.n > limits.max_vertices:
        raise ResourceLimitError(f"{g.n} vertices exceed max_vertices={limits.max_vertices}")
    bkeys = bridge_keys(g)
    comps = two_edge_components_mask(g)
    comp_of = {v: c for c in comps for v in iter_bits(c)}
    start = next(c for c in comps if popcount(c) >= 3 and not is_bipartite_mask(g, c))
    vs = g.vertices
    used: set[tuple[int, int]] = set()
    ears: list[Ear] = []

    def emit(cyc: list[int], paths: list[list[int]], first_kind: str) -> None:
        _mark(used, cyc)
        ears.append(Ear(tuple(vs[i] for i in cyc), first_kind))
        for p in paths:
            _mark(used, p)
            ears.append(Ear(tuple(vs[i] for i in p), _ear_kind(p)))
        comp = comp_of[cyc[0]]
        for a, b in g.edge_indices:
            if (a, b) not in used and comp_of[a] == comp and comp_of[b] == comp:
                used.add((a, b))
                ears.append(Ear((vs[a], vs[b]), OPEN_EAR))

    _, cyc, paths = _component_ears(g, start, True, None)
    emit(cyc, paths, INITIAL_CYCLE)
    built = start
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for a, b in bkeys:
            if (a, b) in used:
                continue
            if comp_of[a] == c and built >> a & 1:
                inner, outer = a, b
            elif comp_of[b] == c and built >> b & 1:
                inner, outer = b, a
            else:
                continue
            used.add((a, b))
            ears.append(Ear((vs[inner], vs[outer]), BRIDGE))
            oc = comp_of[outer]
            built |= oc
            if popcount(oc) >= 3:
                val, cyc2, paths2 = _component_ears(g, oc, False, outer)
                emit(cyc2, paths2, CLOSED_EAR)
            queue.append(oc)
    dec = EarDecomposition(tuple(ears), g)
    dec.validate()
    return dec
