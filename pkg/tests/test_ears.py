from __future__ import annotations

import json
from functools import lru_cache

import pytest
from conftest import brute_bipartite, brute_components, connected_graphs
from hypothesis import given, settings

from stabkit.corpus import brute_contraction_min, brute_subdivision_min
from stabkit.ears import (
    BRIDGE,
    CLOSED_EAR,
    INITIAL_CYCLE,
    OPEN_EAR,
    contract,
    ear_count,
    generalized_ear_decomposition,
    min_critical_making,
    nu_star,
    optimal_decomposition_search,
    optimal_generalized_decomposition,
    phi_psi,
    subdivide,
)
from stabkit.errors import DomainError, InputError, ResourceLimitError
from stabkit.families import cycle
from stabkit.graph import Graph, bridge_keys, is_bipartite_mask
from stabkit.limits import Limits
from stabkit.matching import is_factor_critical

K4_MINUS_EDGE = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
C5_CHORD = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "c")])
PATH4 = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d")])


def ear_paths(adj: dict, built: frozenset, used: frozenset):
    """Every ear on the built part: simple paths through unused edges whose ends are built
    and whose internal vertices are new (closed ears allowed)."""
    out = []

    def walk(path: list, edges: frozenset) -> None:
        here = path[-1]
        for nxt in adj[here]:
            e = frozenset((here, nxt))
            if e in used or e in edges:
                continue
            if nxt in built:
                if len(path) > 1 or nxt != path[0]:
                    out.append((tuple(path) + (nxt,), edges | {e}))
            elif nxt not in path:
                walk(path + [nxt], edges | {e})

    for start in built:
        walk([start], frozenset())
    return out


def brute_phi(g: Graph, first_edge: frozenset | None = None, odd_start: bool = False) -> int:
    """Fewest even ears over every ear decomposition of a 2-edge-connected graph."""
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    all_edges = frozenset(frozenset(e) for e in g.edges)

    @lru_cache(maxsize=None)
    def rest(used: frozenset) -> float:
        if used == all_edges:
            return 0
        built = frozenset(v for e in used for v in e)
        best = float("inf")
        for path, edges in ear_paths(adj, built, used):
            even = (len(path) - 1) % 2 == 0
            best = min(best, even + rest(used | edges))
        return best

    best = float("inf")
    for s in g.vertices:
        for path, edges in ear_paths(adj, frozenset({s}), frozenset()):
            if path[0] != path[-1] or len(path) < 4:
                continue
            if first_edge is not None and first_edge not in edges:
                continue
            even = (len(path) - 1) % 2 == 0
            if odd_start and even:
                continue
            best = min(best, even + rest(edges))
    return int(best)


def two_edge_connected(g: Graph) -> bool:
    return len(brute_components(g.vertices, g.edges)) == 1 and not bridge_keys(g) and g.n >= 3


class TestGeneralizedDecomposition:
    def test_triangle_square(self, triangle_square):
        d = generalized_ear_decomposition(triangle_square)
        assert len(d) == 4 and ear_count(d) == 4
        assert [e.kind for e in d.ears] == [INITIAL_CYCLE, BRIDGE, CLOSED_EAR, BRIDGE]
        assert set(d.ears[0].path) == {"a", "b", "c"}
        assert d.even_count == 1 and d.bridge_count == 2

    def test_triangle(self):
        d = generalized_ear_decomposition(cycle(3))
        assert len(d) == 1 and d.ears[0].kind == INITIAL_CYCLE and d.ears[0].length == 3

    def test_c4(self):
        d = generalized_ear_decomposition(cycle(4))
        assert len(d) == 1 and d.ears[0].is_even

    def test_tree_starts_with_bridge(self):
        d = generalized_ear_decomposition(PATH4)
        assert all(e.kind == BRIDGE for e in d.ears) and ear_count(d) == 3

    def test_odd_start_on_bipartite_rejected(self):
        with pytest.raises(InputError):
            generalized_ear_decomposition(cycle(4), require_odd_start=True)

    def test_odd_start(self):
        d = generalized_ear_decomposition(C5_CHORD, require_odd_start=True)
        assert d.ears[0].kind == INITIAL_CYCLE and not d.ears[0].is_even

    @given(connected_graphs(min_n=2, max_n=10))
    def test_ear_count_identity(self, g):
        d = generalized_ear_decomposition(g)
        d.validate()
        assert len(d) == g.m - g.n + len(bridge_keys(g)) + 1

    def test_serialisation(self, triangle_square):
        d = optimal_generalized_decomposition(triangle_square)
        obj = json.loads(d.to_json())
        assert [e["kind"] for e in obj["ears"]][0] == INITIAL_CYCLE
        assert obj["evenEars"] == 1 and obj["bridges"] == 2
        dot = d.to_dot()
        assert 'color="red"' in dot and 'style="dashed"' in dot and 'color="blue"' in dot
        assert len(d.to_text().splitlines()) == len(d)


class TestContractSubdivide:
    def test_triangle_square_contract(self, triangle_square):
        h = contract(triangle_square, {("c", "d"), ("d", "g"), ("e", "h")})
        assert h.n == 5 and is_factor_critical(h)
        assert h.vertices == ("a", "b", "c", "e", "f")

    def test_contract_nothing(self, triangle_square):
        assert contract(triangle_square, set()) == triangle_square

    def test_contract_triangle_edge(self):
        h = contract(cycle(3), {("v1", "v2")})
        assert h.n == 2 and h.m == 1

    def test_triangle_square_subdivide(self, triangle_square):
        h = subdivide(triangle_square, {("c", "d"), ("d", "g"), ("e", "h")})
        assert h.n == 11 and is_factor_critical(h)

    def test_subdivide_nothing(self, triangle_square):
        assert subdivide(triangle_square, set()) == triangle_square

    def test_c4_to_c5(self):
        h = subdivide(cycle(4), {("v1", "v2")})
        assert h.n == 5 and h.m == 5 and all(h.degree(v) == 2 for v in h.vertices)
        assert is_factor_critical(h)

    def test_bridge_rule_adds_triangle(self):
        h = subdivide(PATH4, {("b", "c")})
        assert h.has_edge("b", "c") and h.has_edge("b", "b~c") and h.has_edge("b~c", "c")


class TestPhiPsi:
    def test_triangle_square(self, triangle_square):
        assert phi_psi(triangle_square) == (1, 2)
        m = min_critical_making(triangle_square)
        assert m.size == 3
        assert is_factor_critical(contract(triangle_square, m.witness))

    def test_odd_cycle(self):
        assert phi_psi(cycle(7)) == (0, 0)
        assert min_critical_making(cycle(5)).size == 0

    def test_c4(self):
        assert phi_psi(cycle(4)) == (1, 0)
        assert min_critical_making(cycle(4)).size == 1

    def test_search_cap(self):
        # six 4-cycles in a chain need six contractions
        edges = []
        for c in range(6):
            a = 3 * c
            edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a, a + 3)]
        g = Graph(range(19), edges)
        with pytest.raises(ResourceLimitError):
            phi_psi(g, Limits(max_subset_size=5))
        assert phi_psi(g, Limits(max_subset_size=6)) == (6, 0)

    @settings(max_examples=60)
    @given(connected_graphs(max_n=7, nonbipartite=True))
    def test_szigeti_equivalences(self, g):
        phi, psi = phi_psi(g)
        m = min_critical_making(g)
        assert m.size == phi + psi
        assert brute_contraction_min(g, phi + psi) == phi + psi
        assert brute_subdivision_min(g, phi + psi) == phi + psi
        assert is_factor_critical(contract(g, m.witness)) == is_factor_critical(subdivide(g, m.witness))

    @given(connected_graphs(max_n=9))
    def test_factor_critical_iff_zero(self, g):
        if g.n < 3 and g.m == 0:
            return
        assert is_factor_critical(g) == (phi_psi(g) == (0, 0))


class TestNuStar:
    def test_triangle_square_all(self, triangle_square):
        assert nu_star(triangle_square, triangle_square.vertices) == 5

    def test_triangle(self, triangle_square):
        assert nu_star(triangle_square, {"a", "b", "c"}) == 1

    def test_triangle_square_w1(self, triangle_square):
        assert nu_star(triangle_square, {"a", "b", "c", "d", "e"}) == 3

    def test_empty(self, triangle_square):
        assert nu_star(triangle_square, set()) == 0

    def test_bipartite_component(self, triangle_square):
        with pytest.raises(DomainError):
            nu_star(triangle_square, {"a", "b", "c", "e", "f"})


class TestOptimalSearch:
    def test_triangle(self):
        d = optimal_decomposition_search(cycle(3))
        assert len(d) == 1 and d.even_count == 0

    def test_k4_minus_edge(self):
        plain = optimal_decomposition_search(K4_MINUS_EDGE)
        odd = optimal_decomposition_search(K4_MINUS_EDGE, odd_start=True)
        assert plain.even_count == odd.even_count == 1
        assert not odd.ears[0].is_even
        assert brute_phi(K4_MINUS_EDGE) == 1

    def test_c5_chord(self):
        d = optimal_decomposition_search(C5_CHORD)
        # a chord keeps the 5-cycle factor-critical, so both counts vanish
        assert d.even_count == min_critical_making(C5_CHORD).size == 0

    def test_rejects_bridges(self, triangle_square):
        with pytest.raises(InputError):
            optimal_decomposition_search(triangle_square)

    def test_generalized_triangle_square(self, triangle_square):
        d = optimal_generalized_decomposition(triangle_square)
        assert d.ears[0].kind == INITIAL_CYCLE and not d.ears[0].is_even
        assert (d.even_count, d.bridge_count) == (1, 2)
        assert ear_count(d) == 4

    @settings(max_examples=40)
    @given(connected_graphs(min_n=3, max_n=6))
    def test_against_exhaustive_decompositions(self, g):
        if not two_edge_connected(g):
            return
        phi = phi_psi(g)[0]
        assert optimal_decomposition_search(g).even_count == phi
        assert brute_phi(g) == phi
        if not is_bipartite_mask(g, g.full_mask):
            assert optimal_decomposition_search(g, odd_start=True).even_count == phi
            assert brute_phi(g, odd_start=True) == phi

    @settings(max_examples=25)
    @given(connected_graphs(min_n=3, max_n=6))
    def test_any_first_edge_is_optimal(self, g):
        # every edge lies on the initial cycle of some optimal decomposition
        if not two_edge_connected(g):
            return
        phi = phi_psi(g)[0]
        for e in g.edges:
            assert brute_phi(g, first_edge=frozenset(e)) == phi

    @given(connected_graphs(max_n=9, nonbipartite=True))
    def test_generalized_is_optimal(self, g):
        d = optimal_generalized_decomposition(g)
        phi, psi = phi_psi(g)
        assert d.even_count == phi and d.bridge_count == psi
        assert d.ears[0].kind == INITIAL_CYCLE and not d.ears[0].is_even
        assert ear_count(d) == len(d)
        assert all(e.kind in (INITIAL_CYCLE, OPEN_EAR, CLOSED_EAR, BRIDGE) for e in d.ears)


def test_brute_bipartite_helper_agrees():
    assert brute_bipartite({"v1", "v2", "v3", "v4"}, cycle(4).edges)
    assert not brute_bipartite({"v1", "v2", "v3"}, cycle(3).edges)
