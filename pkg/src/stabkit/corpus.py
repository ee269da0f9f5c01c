"""Small-graph corpora and the invariant suite run over them.

Exhaustive corpora come from the graph atlas (every graph on at most seven
vertices up to isomorphism); random corpora are drawn with a seeded
``random.Random`` and rejected until connected and non-bipartite.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .ears import (
    ear_count,
    generalized_ear_decomposition,
    min_critical_making,
    optimal_decomposition_search,
    optimal_generalized_decomposition,
    phi_psi,
    subdivide,
)
from .errors import ResourceLimitError
from .graph import (
    Graph,
    bridge_keys,
    format_edge_list,
    is_bipartite_mask,
    is_connected,
    popcount,
    two_edge_components_mask,
)
from .limits import Limits, default_limits
from .matching import is_factor_critical
from .replication import make_factor_critical, min_replication_to_matching_critical
from .stab import _Analyzer, stab_bounds, stable_embedded_primes

ATLAS_MAX = 7


def atlas_graphs(max_size: int, limits: Limits | None = None) -> Iterator[Graph]:
    """Connected non-bipartite graphs on at most ``max_size`` vertices, one per isomorphism class."""
    limits = limits or default_limits()
    cap = min(limits.max_corpus_size, ATLAS_MAX)
    if max_size > cap:
        raise ResourceLimitError(f"exhaustive corpus is capped at {cap} vertices")
    from networkx.generators.atlas import graph_atlas_g

    for h in graph_atlas_g():
        if h.number_of_nodes() < 3 or h.number_of_nodes() > max_size:
            continue
        g = Graph(sorted(h.nodes), h.edges)
        if is_connected(g) and not is_bipartite_mask(g, g.full_mask):
            yield g


def random_graphs(max_size: int, samples: int, seed: int = 0) -> list[Graph]:
    """``samples`` connected non-bipartite graphs with 3 to ``max_size`` vertices."""
    if max_size < 3:
        raise ValueError("need at least 3 vertices for an odd cycle")
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < samples:
        n = rng.randint(3, max_size)
        p = rng.uniform(0.25, 0.8)
        edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
        g = Graph(range(n), edges)
        if is_connected(g) and not is_bipartite_mask(g, g.full_mask):
            out.append(g)
    return out


# -- invariant checks ----------------------------------------------------------------


def brute_contraction_min(g: Graph, max_size: int) -> int | None:
    """Smallest edge set whose contraction is factor-critical, with no structural shortcuts."""
    edges = list(g.edge_indices)
    extra = _kernels.min_contraction(g.n, edges, [], list(range(len(edges))), max_size)
    return None if extra is None else len(extra)


def brute_subdivision_min(g: Graph, max_size: int) -> int | None:
    """Smallest edge set whose subdivision is factor-critical, by ascending exhaustive search."""
    edges = g.edges
    for size in range(max_size + 1):
        for f in combinations(edges, size):
            s = subdivide(g, f)
            if _kernels.factor_critical(s.n, s.adj):
                return size
    return None


def check_ear_count(g: Graph, limits: Limits) -> None:
    for dec in (generalized_ear_decomposition(g), optimal_generalized_decomposition(g, limits)):
        ear_count(dec)


def check_szigeti(g: Graph, limits: Limits) -> None:
    phi, psi = phi_psi(g, limits)
    target = phi + psi
    assert min_critical_making(g, limits).size == target
    assert brute_contraction_min(g, target) == target
    assert brute_subdivision_min(g, target) == target
    dec = optimal_generalized_decomposition(g, limits)
    assert dec.even_count == phi and dec.bridge_count == psi


def check_replication_lower_bound(g: Graph, limits: Limits) -> None:
    phi, psi = phi_psi(g, limits)
    found = min_replication_to_matching_critical(g, None, limits)
    assert found.size == phi + psi
    fc = make_factor_critical(g, limits)
    assert sum(fc.a) == phi + psi


def check_odd_start(g: Graph, limits: Limits) -> None:
    h = g.without_edges(bridge_keys(g))
    for comp in two_edge_components_mask(g):
        if popcount(comp) < 3 or is_bipartite_mask(g, comp):
            continue
        block = h.induced_mask(comp)
        plain = optimal_decomposition_search(block, False, limits).even_count
        odd = optimal_decomposition_search(block, True, limits).even_count
        assert plain == odd, (plain, odd)


def check_bounds(g: Graph, limits: Limits) -> None:
    table = _Analyzer(g, limits).per_prime()
    finite = [a for a in table.values() if a is not None]
    bounds = stab_bounds(g)
    assert table[0] <= bounds.dstab_bound
    assert max(finite) <= bounds.astab_bound


def check_factor_critical(g: Graph, limits: Limits) -> None:
    assert is_factor_critical(g) == (phi_psi(g, limits) == (0, 0))


def check_stability(g: Graph, limits: Limits) -> None:
    table = _Analyzer(g, limits).per_prime()
    top = max(a for a in table.values() if a is not None)

    def ass(k: int) -> set[int]:
        return {z for z, a in table.items() if a is not None and a <= k}

    chain = [ass(k) for k in range(1, top + 2)]
    assert all(x <= y for x, y in zip(chain, chain[1:]))
    assert chain[top - 1] == chain[top]
    assert top == 1 or chain[top - 2] != chain[top - 1]
    stable = {g.full_mask & ~g.mask(u) for u in stable_embedded_primes(g, limits)}
    assert 0 in stable
    minimal = {z for z, a in table.items() if a == 1}
    assert stable | minimal == chain[top - 1]


CHECKS: dict[str, Callable[[Graph, Limits], None]] = {
    "ear-count": check_ear_count,
    "szigeti": check_szigeti,
    "replication-lower-bound": check_replication_lower_bound,
    "odd-start": check_odd_start,
    "bounds": check_bounds,
    "factor-critical": check_factor_critical,
    "stability": check_stability,
}


@dataclass
class FamilyResult:
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None
    message: str | None = None


@dataclass
class SuiteReport:
    graphs: int = 0
    families: dict[str, FamilyResult] = field(default_factory=lambda: {k: FamilyResult() for k in CHECKS})

    @property
    def ok(self) -> bool:
        return all(r.failed == 0 for r in self.families.values())

    def to_json_obj(self) -> dict:
        return {
            "graphs": self.graphs,
            "ok": self.ok,
            "families": {
                name: {
                    "passed": r.passed,
                    "failed": r.failed,
                    "counterexample": r.counterexample,
                    "message": r.message,
                }
                for name, r in self.families.items()
            },
        }

    def to_text(self) -> str:
        lines = [f"graphs: {self.graphs}"]
        for name, r in self.families.items():
            status = "PASS" if r.failed == 0 else "FAIL"
            lines.append(f"{status} {name}: {r.passed} passed, {r.failed} failed")
            if r.counterexample is not None:
                lines.append(f"  {r.message}")
                lines += ["  " + line for line in r.counterexample.splitlines()]
        return "\n".join(lines) + "\n"


def run_checks(g: Graph, limits: Limits | None = None) -> dict[str, str | None]:
    """Every invariant family on one graph; ``None`` marks a pass, otherwise the failure text."""
    limits = limits or default_limits()
    out: dict[str, str | None] = {}
    for name, check in CHECKS.items():
        try:
            check(g, limits)
            out[name] = None
        except AssertionError as exc:
            out[name] = f"assertion failed: {exc}" if str(exc) else "assertion failed"
    return out


def _run_one(args: tuple[Graph, Limits]) -> dict[str, str | None]:
    return run_checks(*args)


def run_suite(graphs: Sequence[Graph], limits: Limits | None = None, jobs: int = 1) -> SuiteReport:
    """Run all families; graphs are processed by (order, size), so the counterexample
    kept per family is the first failure in that order."""
    limits = limits or default_limits()
    graphs = sorted(graphs, key=lambda g: (g.n, g.m))
    report = SuiteReport()
    work = [(g, limits) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work, chunksize=8))
    else:
        results = [_run_one(w) for w in work]
    for g, res in zip(graphs, results):
        report.graphs += 1
        for name, msg in res.items():
            fam = report.families[name]
            if msg is None:
                fam.passed += 1
            else:
                fam.failed += 1
                if fam.counterexample is None:
                    fam.counterexample = format_edge_list(g)
                    fam.message = msg
    return report
