# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_pykernels``.

Same signatures, same deterministic results.  Graphs are limited to 64
vertices (one machine word per neighbour mask); larger inputs are handed
back to the Python implementation.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

from . import _pykernels

BACKEND = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef struct Blossom:
    int n
    int deg[MAXN]
    int nbr[MAXN][MAXN]
    int match[MAXN]
    int parent[MAXN]
    int base[MAXN]
    char used[MAXN]
    char blos[MAXN]
    int queue[MAXN]


cdef inline int _lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef void _load(Blossom* s, int n, const uint64_t* adj, uint64_t alive) noexcept nogil:
    cdef int v, w
    cdef uint64_t a
    s.n = n
    for v in range(n):
        s.deg[v] = 0
        s.match[v] = -1
        if (alive >> v) & 1:
            a = adj[v] & alive
            while a:
                w = _lowbit(a)
                s.nbr[v][s.deg[v]] = w
                s.deg[v] += 1
                a &= a - 1


cdef int _lca(Blossom* s, int a, int b) noexcept nogil:
    cdef char seen[MAXN]
    memset(seen, 0, MAXN)
    while True:
        a = s.base[a]
        seen[a] = 1
        if s.match[a] == -1:
            break
        a = s.parent[s.match[a]]
    while True:
        b = s.base[b]
        if seen[b]:
            return b
        b = s.parent[s.match[b]]


cdef void _mark_path(Blossom* s, int v, int b, int child) noexcept nogil:
    while s.base[v] != b:
        s.blos[s.base[v]] = 1
        s.blos[s.base[s.match[v]]] = 1
        s.parent[v] = child
        child = s.match[v]
        v = s.parent[s.match[v]]


cdef int _find_path(Blossom* s, int root) noexcept nogil:
    cdef int n = s.n
    cdef int i, k, v, to, cur, head = 0, tail = 0
    for i in range(n):
        s.used[i] = 0
        s.parent[i] = -1
        s.base[i] = i
    s.used[root] = 1
    s.queue[tail] = root
    tail += 1
    while head < tail:
        v = s.queue[head]
        head += 1
        for k in range(s.deg[v]):
            to = s.nbr[v][k]
            if s.base[v] == s.base[to] or s.match[v] == to:
                continue
            if to == root or (s.match[to] != -1 and s.parent[s.match[to]] != -1):
                cur = _lca(s, v, to)
                memset(s.blos, 0, MAXN)
                _mark_path(s, v, cur, to)
                _mark_path(s, to, cur, v)
                for i in range(n):
                    if s.blos[s.base[i]]:
                        s.base[i] = cur
                        if not s.used[i]:
                            s.used[i] = 1
                            s.queue[tail] = i
                            tail += 1
            elif s.parent[to] == -1:
                s.parent[to] = v
                if s.match[to] == -1:
                    return to
                s.used[s.match[to]] = 1
                s.queue[tail] = s.match[to]
                tail += 1
    return -1


cdef int _solve(Blossom* s, int n, const uint64_t* adj, uint64_t alive) noexcept nogil:
    cdef int v, k, w, u, pv, nxt, size = 0
    _load(s, n, adj, alive)
    for v in range(n):
        if s.match[v] == -1:
            for k in range(s.deg[v]):
                w = s.nbr[v][k]
                if s.match[w] == -1:
                    s.match[v] = w
                    s.match[w] = v
                    break
    for v in range(n):
        if s.match[v] == -1 and s.deg[v] > 0:
            u = _find_path(s, v)
            while u != -1:
                pv = s.parent[u]
                nxt = s.match[pv]
                s.match[u] = pv
                s.match[pv] = u
                u = nxt
    for v in range(n):
        if s.match[v] > v:
            size += 1
    return size


cdef bint _connected(const uint64_t* adj, uint64_t alive) noexcept nogil:
    cdef uint64_t comp, frontier, nxt, f
    if alive == 0:
        return False
    comp = alive & (~alive + 1)
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[_lowbit(f)]
            f &= f - 1
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp == alive


cdef bint _factor_critical(Blossom* s, int n, const uint64_t* adj, uint64_t alive) noexcept nogil:
    cdef int size = __builtin_popcountll(alive)
    cdef int need
    cdef uint64_t rest, low
    if size % 2 == 0 or not _connected(adj, alive):
        return False
    need = (size - 1) // 2
    rest = alive
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        if _solve(s, n, adj, alive & ~low) != need:
            return False
    return True


cdef uint64_t _alive(int n, long long alive):
    if alive < 0:
        return (<uint64_t>-1) if n == 64 else ((<uint64_t>1 << n) - 1)
    return <uint64_t>alive


def max_matching(int n, adj, alive=-1):
    if n > MAXN or (alive >= 0 and alive >> MAXN):
        return _pykernels.max_matching(n, adj, alive)
    cdef uint64_t cadj[MAXN]
    cdef Blossom s
    cdef int v
    for v in range(n):
        cadj[v] = adj[v]
    _solve(&s, n, cadj, _alive(n, alive))
    return [s.match[v] for v in range(n)]


def matching_size(int n, adj, alive=-1):
    if n > MAXN or (alive >= 0 and alive >> MAXN):
        return _pykernels.matching_size(n, adj, alive)
    cdef uint64_t cadj[MAXN]
    cdef Blossom s
    cdef int v
    for v in range(n):
        cadj[v] = adj[v]
    return _solve(&s, n, cadj, _alive(n, alive))


def factor_critical(int n, adj, alive=-1):
    if n > MAXN or (alive >= 0 and alive >> MAXN):
        return _pykernels.factor_critical(n, adj, alive)
    cdef uint64_t cadj[MAXN]
    cdef Blossom s
    cdef int v
    for v in range(n):
        cadj[v] = adj[v]
    return bool(_factor_critical(&s, n, cadj, _alive(n, alive)))


quotient_adjacency = _pykernels.quotient_adjacency


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _try_contraction(Blossom* s, int n, const int* eu, const int* ev, int m,
                           const int* chosen, int nchosen) noexcept nogil:
    cdef int parent[MAXN]
    cdef int slot[MAXN]
    cdef uint64_t qadj[MAXN]
    cdef int i, a, b, count = 0, x, y
    for i in range(n):
        parent[i] = i
        slot[i] = -1
    for i in range(nchosen):
        a = _find(parent, eu[chosen[i]])
        b = _find(parent, ev[chosen[i]])
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    for i in range(n):
        a = _find(parent, i)
        if slot[a] == -1:
            slot[a] = count
            count += 1
    for i in range(count):
        qadj[i] = 0
    for i in range(m):
        x = slot[_find(parent, eu[i])]
        y = slot[_find(parent, ev[i])]
        if x != y:
            qadj[x] |= (<uint64_t>1) << y
            qadj[y] |= (<uint64_t>1) << x
    return _factor_critical(s, count, qadj, ((<uint64_t>-1) if count == 64 else ((<uint64_t>1 << count) - 1)))


def min_contraction(int n, edges, forced, candidates, int max_extra):
    cdef int m = len(edges)
    cdef int nf = len(forced)
    cdef int nc = len(candidates)
    if n > MAXN or m > 4096:
        return _pykernels.min_contraction(n, edges, forced, candidates, max_extra)
    cdef int eu[4096]
    cdef int ev[4096]
    cdef int cand[4096]
    cdef int chosen[4096]
    cdef int idx[4096]
    cdef int i, size, k, j
    cdef Blossom s
    for i in range(m):
        eu[i] = edges[i][0]
        ev[i] = edges[i][1]
    for i in range(nf):
        chosen[i] = forced[i]
    for i in range(nc):
        cand[i] = candidates[i]
    for size in range(0, min(max_extra, nc) + 1):
        for i in range(size):
            idx[i] = i
        while True:
            for i in range(size):
                chosen[nf + i] = cand[idx[i]]
            if _try_contraction(&s, n, eu, ev, m, chosen, nf + size):
                return tuple(cand[idx[i]] for i in range(size))
            # next combination in lexicographic order
            k = size - 1
            while k >= 0 and idx[k] == nc - size + k:
                k -= 1
            if k < 0:
                break
            idx[k] += 1
            for j in range(k + 1, size):
                idx[j] = idx[j - 1] + 1
    return None


def odd_cover_table(int n, adj):
    if n > 30:
        raise ValueError("odd_cover_table supports at most 30 vertices")
    cdef uint64_t cadj[MAXN]
    cdef int v
    for v in range(n):
        cadj[v] = adj[v]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    table = bytearray(size)
    cdef unsigned char[::1] out = table
    cdef char color[MAXN]
    cdef int stack[MAXN]
    cdef int top, u, x, start
    cdef uint64_t w, rest, comp, a, lb
    cdef bint ok, odd
    with nogil:
        for w in range(1, <uint64_t>size):
            rest = w
            ok = True
            while rest and ok:
                start = _lowbit(rest)
                comp = (<uint64_t>1) << start
                color[start] = 0
                top = 0
                stack[top] = start
                top += 1
                odd = False
                while top:
                    top -= 1
                    u = stack[top]
                    a = cadj[u] & w
                    while a:
                        x = _lowbit(a)
                        lb = (<uint64_t>1) << x
                        a &= a - 1
                        if comp & lb:
                            if color[x] == color[u]:
                                odd = True
                        else:
                            comp |= lb
                            color[x] = 1 - color[u]
                            stack[top] = x
                            top += 1
                ok = odd
                rest &= ~comp
            if ok:
                out[w] = 1
    return table


def dominant_sets(int n, adj, z_mask, const unsigned char[::1] table):
    cdef uint64_t cadj[MAXN]
    cdef int v
    for v in range(n):
        cadj[v] = adj[v]
    cdef uint64_t z = z_mask
    cdef uint64_t nz = 0, rest, full, free, w, nw
    rest = z
    while rest:
        nz |= cadj[_lowbit(rest)]
        rest &= rest - 1
    full = (<uint64_t>-1) if n == 64 else ((<uint64_t>1 << n) - 1)
    free = full & ~(z | nz)
    out = []
    w = free
    while w:
        if table[w]:
            nw = 0
            rest = w
            while rest:
                nw |= cadj[_lowbit(rest)]
                rest &= rest - 1
            if not (free & ~nw):
                out.append(w)
        w = (w - 1) & free
    out.sort()
    return out
