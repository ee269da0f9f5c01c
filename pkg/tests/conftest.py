"""Shared strategies and brute-force reference implementations.

The helpers here deliberately avoid the package's own algorithms: they work
on plain Python sets and enumerate everything, so that they can serve as
independent oracles for the small inputs used in tests.
"""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stabkit.graph import Graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# -- plain-set graph helpers -----------------------------------------------------


def adjacency(g: Graph) -> dict:
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_components(vertices, edges) -> list[set]:
    vertices = set(vertices)
    adj = {v: set() for v in vertices}
    for u, v in edges:
        if u in vertices and v in vertices:
            adj[u].add(v)
            adj[v].add(u)
    seen: set = set()
    out = []
    for s in vertices:
        if s in seen:
            continue
        comp = {s}
        todo = [s]
        while todo:
            x = todo.pop()
            for y in adj[x] - comp:
                comp.add(y)
                todo.append(y)
        seen |= comp
        out.append(comp)
    return out


def brute_bipartite(vertices, edges) -> bool:
    """Try every 2-colouring."""
    vs = list(vertices)
    es = [(u, v) for u, v in edges if u in vertices and v in vertices]
    for bits in range(1 << max(len(vs) - 1, 0)):
        colour = {v: (bits >> i) & 1 for i, v in enumerate(vs[1:])}
        if vs:
            colour[vs[0]] = 0
        if all(colour[u] != colour[v] for u, v in es):
            return True
    return False


def brute_bridges(g: Graph) -> set[frozenset]:
    base = len(brute_components(g.vertices, g.edges))
    out = set()
    for e in g.edges:
        rest = [f for f in g.edges if f != e]
        if len(brute_components(g.vertices, rest)) > base:
            out.add(frozenset(e))
    return out


def all_matchings(edges) -> list[list]:
    out: list[list] = [[]]

    def rec(start: int, used: set, chosen: list) -> None:
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            out.append(list(chosen))
            rec(i + 1, used | {u, v}, chosen)
            chosen.pop()

    rec(0, set(), [])
    return out


def brute_nu(vertices, edges) -> int:
    vertices = set(vertices)
    es = [(u, v) for u, v in edges if u in vertices and v in vertices]
    return max(len(m) for m in all_matchings(es))


def brute_factor_critical(vertices, edges) -> bool:
    vertices = set(vertices)
    if len(vertices) % 2 == 0 or len(brute_components(vertices, edges)) != 1:
        return False
    half = (len(vertices) - 1) // 2
    return all(brute_nu(vertices - {v}, edges) == half for v in vertices)


def brute_gallai_edmonds(g: Graph) -> tuple[set, set, set]:
    nu = brute_nu(g.vertices, g.edges)
    vs = set(g.vertices)
    d = {v for v in vs if brute_nu(vs - {v}, g.edges) == nu}
    adj = adjacency(g)
    a = set().union(*(adj[v] for v in d)) - d if d else set()
    return d, a, vs - d - a


def brute_dominant_star(g: Graph, u) -> set[frozenset]:
    """``D*(U)`` by trying every subset ``W``."""
    vs = set(g.vertices)
    z = vs - set(u)
    adj = adjacency(g)
    if any(y in adj[x] for x in z for y in z):
        return set()
    nz = set().union(*(adj[x] for x in z)) if z else set()
    out = set()
    for r in range(len(vs) + 1):
        for w in combinations(sorted(vs, key=g.index), r):
            w = set(w)
            if w & (z | nz):
                continue
            nw = set().union(*(adj[x] for x in w)) if w else set()
            if nw | nz | z != vs:
                continue
            if w and any(brute_bipartite(c, g.edges) for c in brute_components(w, g.edges)):
                continue
            out.add(frozenset(w))
    return out


# -- strategies ----------------------------------------------------------------------


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8, nonbipartite: bool = False) -> Graph:
    """Connected graphs: a random tree plus random extra edges; optionally with a forced triangle."""
    lo = max(min_n, 3) if nonbipartite else min_n
    n = draw(st.integers(lo, max_n))
    edges = set()
    for i in range(1, n):
        edges.add((draw(st.integers(0, i - 1)), i))
    pairs = [(i, j) for i, j in combinations(range(n), 2) if (i, j) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
        edges.update(extra)
    if nonbipartite:
        a, b, c = sorted(draw(st.lists(st.integers(0, n - 1), min_size=3, max_size=3, unique=True)))
        edges.update({(a, b), (b, c), (a, c)})
    return Graph([f"v{i}" for i in range(n)], [(f"v{i}", f"v{j}") for i, j in sorted(edges)])


@pytest.fixture
def triangle_square() -> Graph:
    from stabkit.families import triangle_square as build

    return build()
