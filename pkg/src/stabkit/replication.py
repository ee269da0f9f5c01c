"""Vertex replication ``p_a(G)`` and the minimum-cost way to make a graph factor-critical."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations_with_replacement
from typing import NamedTuple, Union

from . import _kernels
from .ears import (
    BRIDGE,
    CLOSED_EAR,
    INITIAL_CYCLE,
    OPEN_EAR,
    Ear,
    EarDecomposition,
    nu_star_mask,
    optimal_generalized_decomposition,
    phi_mask,
)
from .errors import DomainError, InputError, ResourceLimitError
from .graph import (
    Graph,
    Label,
    bridge_keys,
    components_mask,
    is_bipartite_mask,
    iter_bits,
    require_connected_nonbipartite,
)
from .limits import Limits, default_limits
from .matching import is_matching_critical_mask, nu_mask

VectorLike = Union[Mapping[Label, int], Sequence[int]]


def as_vector(g: Graph, a: VectorLike) -> tuple[int, ...]:
    """Dense multiplicity vector over the canonical vertex order."""
    if isinstance(a, Mapping):
        out = [0] * g.n
        for v, k in a.items():
            out[g.index(v)] = int(k)
    else:
        out = [int(k) for k in a]
        if len(out) != g.n:
            raise InputError(f"vector has length {len(out)}, graph has {g.n} vertices")
    if any(k < 0 for k in out):
        raise InputError("multiplicities must be non-negative")
    return tuple(out)


def indicator(g: Graph, s: Iterable[Label] | None = None) -> tuple[int, ...]:
    mask = g.full_mask if s is None else g.mask(s)
    return tuple(mask >> i & 1 for i in range(g.n))


def support_mask(a: Sequence[int]) -> int:
    out = 0
    for i, k in enumerate(a):
        if k:
            out |= 1 << i
    return out


def support(g: Graph, a: VectorLike) -> frozenset:
    return g.labels(support_mask(as_vector(g, a)))


def replicate(g: Graph, a: VectorLike) -> Graph:
    """``p_a(G)``: vertex ``v`` becomes ``a_v`` pairwise non-adjacent copies ``(v, 1) .. (v, a_v)``.

    Copies of ``u`` and ``v`` are adjacent exactly when ``uv`` is an edge.
    """
    vec = as_vector(g, a)
    if not any(vec):
        raise InputError("replication vector is zero")
    vs = g.vertices
    verts = [(vs[i], k) for i in range(g.n) for k in range(1, vec[i] + 1)]
    edges = [
        ((vs[i], k), (vs[j], l))
        for i, j in g.edge_indices
        for k in range(1, vec[i] + 1)
        for l in range(1, vec[j] + 1)
    ]
    return Graph(verts, edges)


def replicated_support(s: Graph) -> frozenset:
    """Original vertices present in a replicated graph."""
    return frozenset(v for v, _ in s.vertices)


class FactorCritical(NamedTuple):
    a: tuple[int, ...]
    witness: EarDecomposition


def _copy_key(g: Graph, label: tuple) -> tuple[int, int]:
    return (g.index(label[0]), label[1])


def make_factor_critical(g: Graph, limits: Limits | None = None) -> FactorCritical:
    """A vector ``a`` with ``|a| = phi + psi`` such that ``p_{a+1}(G)`` is factor-critical.

    Walks an optimal generalized ear decomposition that opens with an odd
    cycle.  Odd ears are copied as they are.  An even ear ``P1 .. Pj``
    duplicates ``P1`` and is rerouted as ``Q, P1', P2, .., Pj``; a bridge
    ``P1 P2`` duplicates ``P1`` and becomes ``Q, P1', P2, P1``.  ``Q`` is the
    smallest already-built neighbour of ``P1``.  The returned witness is an
    all-odd ear decomposition of the replicated graph.
    """
    require_connected_nonbipartite(g)
    dec = optimal_generalized_decomposition(g, limits)
    copies = [1] * g.n
    built: set[tuple] = set()
    new_paths: list[tuple[tuple, str]] = []

    def orig(v: Label) -> tuple:
        return (v, 1)

    def pick_q(p: Label) -> tuple:
        pi = g.index(p)
        cands = [x for x in built if g.adj[pi] >> g.index(x[0]) & 1]
        return min(cands, key=lambda x: _copy_key(g, x))

    for ear in dec.ears:
        path = ear.path
        if ear.kind == BRIDGE:
            p1, p2 = path
            q = pick_q(p1)
            copies[g.index(p1)] += 1
            dup = (p1, copies[g.index(p1)])
            new = (q, dup, orig(p2), orig(p1))
            new_paths.append((new, OPEN_EAR))
            built.update((dup, orig(p2)))
        elif ear.is_even and ear.kind != INITIAL_CYCLE:
            p1 = path[0]
            q = pick_q(p1)
            copies[g.index(p1)] += 1
            dup = (p1, copies[g.index(p1)])
            new = (q, dup) + tuple(orig(v) for v in path[1:])
            new_paths.append((new, CLOSED_EAR if new[0] == new[-1] else OPEN_EAR))
            built.update(new[1:-1])
        else:
            if ear.kind == INITIAL_CYCLE and ear.is_even:
                raise AssertionError("optimal decomposition must open with an odd cycle")
            new = tuple(orig(v) for v in path)
            new_paths.append((new, ear.kind))
            built.update(new)

    a = tuple(c - 1 for c in copies)
    s = replicate(g, [c for c in copies])
    used: set[tuple[int, int]] = set()
    ears = []
    for path, kind in new_paths:
        ears.append(Ear(path, kind))
        for u, v in zip(path, path[1:]):
            used.add(s.edge_key(u, v))
    vs = s.vertices
    ears.extend(Ear((vs[i], vs[j]), OPEN_EAR) for i, j in s.edge_indices if (i, j) not in used)
    witness = EarDecomposition(tuple(ears), s)
    witness.validate()
    assert all(not e.is_even for e in witness.ears)
    assert _kernels.factor_critical(s.n, s.adj)
    return FactorCritical(a, witness)


class MinReplication(NamedTuple):
    size: int
    """Smallest ``|a|`` making ``p_{a+1}`` matching-critical."""
    nu: int
    """Matching number attained at that size (the minimum over all such ``a``)."""
    a: tuple[int, ...]


def min_replication_to_matching_critical(
    g: Graph, s: Iterable[Label] | None = None, limits: Limits | None = None
) -> MinReplication:
    """Exhaustive search over ``a`` supported on ``s`` by increasing ``|a|``.

    The induced graph on ``s`` must have only non-bipartite components.  The
    result is checked against ``phi + psi`` and ``nu*``.
    """
    limits = limits or default_limits()
    mask = g.full_mask if s is None else g.mask(s)
    if not mask:
        raise InputError("empty vertex set")
    comps = components_mask(g, mask)
    if any(is_bipartite_mask(g, c) for c in comps):
        raise DomainError("every component must contain an odd cycle")
    h = g.induced_mask(mask)
    idx = list(range(h.n))
    for total in range(0, limits.max_replication_extra + 1):
        for combo in combinations_with_replacement(idx, total):
            vec = [1] * h.n
            for i in combo:
                vec[i] += 1
            rep = replicate(h, vec)
            if is_matching_critical_mask(rep, rep.full_mask):
                nu = nu_mask(rep)
                a = [0] * g.n
                for i, gi in enumerate(iter_bits(mask)):
                    a[gi] = vec[i] - 1
                assert total == phi_mask(g, mask, limits) + len(bridge_keys(h))
                assert nu == nu_star_mask(g, mask, limits)
                return MinReplication(total, nu, tuple(a))
    raise ResourceLimitError(f"no matching-critical replication with |a| <= {limits.max_replication_extra}")
