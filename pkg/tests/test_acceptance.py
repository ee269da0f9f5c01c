"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line with its wall time."""

from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

from stabkit.corpus import atlas_graphs, run_suite
from stabkit.ears import min_critical_making, nu_star, phi_psi
from stabkit.families import cycle, triangle_square, friendship, load, triangle_polygon
from stabkit.matching import is_factor_critical, matching_number
from stabkit.oracle import edge_ideal, edge_power_primes, irreducible_decomposition, power
from stabkit.replication import make_factor_critical, replicate
from stabkit.stab import (
    ass_chain,
    astab,
    astab_for_prime,
    check_irreducible_component,
    dstab,
    stab_bounds,
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, budget: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n{status} criterion {number}: {title} ({elapsed:.2f}s, budget {budget:g}s)")

    return run


def without(g, labels) -> frozenset:
    return frozenset(g.vertices) - set(labels)


def test_criterion_1_triangle_square_replication(criterion):
    with criterion(1, "triangle_square phi/psi, nu*, critical-making and factor-critical replication", 1.0):
        g = triangle_square()
        assert phi_psi(g) == (1, 2)
        assert nu_star(g, g.vertices) == 5
        assert min_critical_making(g).size == 3
        fc = make_factor_critical(g)
        assert sum(fc.a) == 3
        s = replicate(g, [x + 1 for x in fc.a])
        assert is_factor_critical(s)
        assert matching_number(s).size == 5


def test_criterion_2_triangle_square_chain(criterion):
    with criterion(2, "triangle_square astab = dstab = 4 and the Ass chain", 5.0):
        g = triangle_square()
        assert astab(g) == dstab(g) == 4
        chain = ass_chain(g, [1, 2, 3, 4])
        assert chain[2] - chain[1] == {without(g, "eg"), without(g, "fh"), without(g, "gh")}
        assert chain[1] <= chain[2] <= chain[3] <= chain[4]
        assert chain[3] == chain[2]
        assert chain[4] - chain[3] == {frozenset(g.vertices), without(g, "h")}


@pytest.mark.parametrize("n,k", [(3, 2), (5, 3), (7, 4)])
def test_criterion_3_odd_cycles(criterion, n, k):
    with criterion(3, f"C_{n}: astab = dstab = {k}", 1.0):
        g = cycle(n)
        assert astab(g) == dstab(g) == k
        if n == 5:
            assert stab_bounds(g).astab_bound == 3


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_4_friendship(criterion, n):
    with criterion(4, f"{n} triangles on one vertex: Ass(I^i) = Ass(I) + {{V}} for i >= 2", 5.0):
        g = friendship(n)
        a = astab(g)
        assert a == dstab(g) == 2
        ks = list(range(1, a + 4))
        chain = ass_chain(g, ks)
        v = frozenset(g.vertices)
        assert v not in chain[1]
        for i in ks[1:]:
            assert chain[i] == chain[1] | {v}


def test_criterion_5_triangle_hendecagon(criterion):
    with criterion(5, "triangle and hendecagon: dstab 6, astab 8, per-prime 7 and 8", 60.0):
        g = load("triangle_hendecagon")
        assert g.n == 13 and g == triangle_polygon(5)
        assert dstab(g) == 6
        assert astab(g) == 8
        assert astab_for_prime(g, without(g, ["a6"])) == 7
        assert astab_for_prime(g, without(g, ["a3"])) == 8


@pytest.mark.parametrize("l", [3, 4])
def test_criterion_6_gap_family(criterion, l):
    with criterion(6, f"2l+3 vertex family, l = {l}: dstab = l+1, astab = 2l-2", 60.0):
        # odd cycle a1..a_{2l+1} and the triangle a1 a_{2l+2} a_{2l+3}
        g = triangle_polygon(l)
        assert g.n == 2 * l + 3
        assert dstab(g) == l + 1
        assert astab(g) == 2 * l - 2


def test_criterion_7_oracle_equivalence(criterion):
    with criterion(7, "formula equals ideal-theoretic Ass for every graph on <= 6 vertices, k = 1..3", 600.0):
        graphs = list(atlas_graphs(6))
        assert len(graphs) == 115
        mismatches = []
        for g in graphs:
            formula = ass_chain(g, [1, 2, 3])
            prev: set = set()
            for k in (1, 2, 3):
                oracle = edge_power_primes(g, k)
                if oracle != formula[k]:
                    mismatches.append((g, k))
                assert prev <= oracle and (k == 1 or formula[k - 1] <= formula[k])
                prev = oracle
        assert not mismatches


def test_criterion_8_property_suite(criterion):
    with criterion(8, "invariant suite over every graph on <= 7 vertices", 900.0):
        graphs = list(atlas_graphs(7))
        assert len(graphs) == 924
        report = run_suite(graphs)
        failed = {name: r.counterexample for name, r in report.families.items() if r.failed}
        assert not failed, failed
        assert report.graphs == len(graphs)


def test_criterion_9_irreducible_components(criterion):
    with criterion(9, "embedded irreducible components of I^2 (triangle) and I^3 (C_5)", 60.0):
        t = load("triangle")
        assert check_irreducible_component(t, [1, 1, 1], t.vertices, 2)
        assert (2, 2, 2) in irreducible_decomposition(power(edge_ideal(t), 2))
        c5 = cycle(5)
        assert check_irreducible_component(c5, [1] * 5, c5.vertices, 3)
        assert (2,) * 5 in irreducible_decomposition(power(edge_ideal(c5), 3))
