"""Pure-Python hot kernels.

Everything here works on dense vertex indices and integer neighbour masks.
``_ckernels.pyx`` implements the same functions with the same results; this
module is the fallback when the extension is not built.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations

BACKEND = "python"


def _adj_lists(n: int, adj: Sequence[int], alive: int) -> list[list[int]]:
    out = []
    for v in range(n):
        row = []
        if alive >> v & 1:
            a = adj[v] & alive
            while a:
                low = a & -a
                row.append(low.bit_length() - 1)
                a ^= low
        out.append(row)
    return out


def max_matching(n: int, adj: Sequence[int], alive: int = -1) -> list[int]:
    """Edmonds' blossom algorithm on the subgraph induced by ``alive``.

    Returns the mate array (``-1`` for exposed vertices).  Greedy seeding and
    every scan run in increasing index order, so the result is deterministic.
    """
    if alive < 0:
        alive = (1 << n) - 1
    nbrs = _adj_lists(n, adj, alive)
    match = [-1] * n
    for v in range(n):
        if match[v] == -1 and alive >> v & 1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1 and alive >> v & 1 and nbrs[v]:
            u = find_path(v)
            while u != -1:
                pv = parent[u]
                nxt = match[pv]
                match[u] = pv
                match[pv] = u
                u = nxt
    return match


def matching_size(n: int, adj: Sequence[int], alive: int = -1) -> int:
    return sum(1 for v, w in enumerate(max_matching(n, adj, alive)) if w > v)


def _connected(adj: Sequence[int], alive: int) -> bool:
    if not alive:
        return False
    comp = alive & -alive
    frontier = comp
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp == alive


def factor_critical(n: int, adj: Sequence[int], alive: int = -1) -> bool:
    """Connected, odd order, and every vertex-deleted subgraph has a perfect matching."""
    if alive < 0:
        alive = (1 << n) - 1
    size = bin(alive).count("1")
    if size % 2 == 0 or not _connected(adj, alive):
        return False
    need = (size - 1) // 2
    rest = alive
    while rest:
        low = rest & -rest
        rest ^= low
        if matching_size(n, adj, alive & ~low) != need:
            return False
    return True


def quotient_adjacency(n: int, edges: Sequence[tuple[int, int]], merged: Sequence[int]) -> tuple[int, list[int]]:
    """Adjacency masks of the simple quotient after contracting ``merged`` edges."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in merged:
        a, b = edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    slot = [-1] * n
    count = 0
    for v in range(n):
        r = find(v)
        if slot[r] == -1:
            slot[r] = count
            count += 1
    qadj = [0] * count
    for a, b in edges:
        x, y = slot[find(a)], slot[find(b)]
        if x != y:
            qadj[x] |= 1 << y
            qadj[y] |= 1 << x
    return count, qadj


def min_contraction(
    n: int,
    edges: Sequence[tuple[int, int]],
    forced: Sequence[int],
    candidates: Sequence[int],
    max_extra: int,
) -> tuple[int, ...] | None:
    """Smallest (then lexicographically first) extra set whose contraction, together
    with ``forced``, leaves a factor-critical graph.  ``None`` if none has size
    at most ``max_extra``."""
    forced = list(forced)
    for size in range(0, min(max_extra, len(candidates)) + 1):
        for extra in combinations(candidates, size):
            count, qadj = quotient_adjacency(n, edges, forced + list(extra))
            if factor_critical(count, qadj):
                return tuple(extra)
    return None


def odd_cover_table(n: int, adj: Sequence[int]) -> bytearray:
    """``table[W] == 1`` iff ``W`` is nonempty and each component of ``G[W]`` has an odd cycle."""
    size = 1 << n
    table = bytearray(size)
    color = [0] * n
    for w in range(1, size):
        rest = w
        ok = True
        while rest and ok:
            low = rest & -rest
            start = low.bit_length() - 1
            color[start] = 0
            comp = low
            stack = [start]
            odd = False
            while stack:
                u = stack.pop()
                a = adj[u] & w
                while a:
                    lb = a & -a
                    x = lb.bit_length() - 1
                    a ^= lb
                    if comp & lb:
                        if color[x] == color[u]:
                            odd = True
                    else:
                        comp |= lb
                        color[x] = 1 - color[u]
                        stack.append(x)
            ok = odd
            rest &= ~comp
        if ok:
            table[w] = 1
    return table


def dominant_sets(n: int, adj: Sequence[int], z_mask: int, table: bytes) -> list[int]:
    """Nonempty ``W`` inside ``R = V - (Z | N(Z))`` with ``table[W]`` set and ``R <= N(W)``."""
    nz = 0
    rest = z_mask
    while rest:
        low = rest & -rest
        nz |= adj[low.bit_length() - 1]
        rest ^= low
    full = (1 << n) - 1
    free = full & ~(z_mask | nz)
    out = []
    w = free
    while w:
        if table[w]:
            nw = 0
            rest = w
            while rest:
                low = rest & -rest
                nw |= adj[low.bit_length() - 1]
                rest ^= low
            if not (free & ~nw):
                out.append(w)
        w = (w - 1) & free
    out.sort()
    return out
