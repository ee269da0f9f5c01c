"""Maximum matchings, factor-criticality and the Gallai-Edmonds partition."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

from . import _kernels
from .errors import InputError
from .graph import Edge, Graph, Label, components_mask, is_connected, iter_bits, neighbors_mask


class Matching(NamedTuple):
    size: int
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class GEPartition:
    """Gallai-Edmonds triple: ``D`` vertices missed by some maximum matching,
    ``A`` their outside neighbours, ``C`` the rest."""

    D: frozenset
    A: frozenset
    C: frozenset


def nu_mask(g: Graph, alive: int | None = None) -> int:
    """Matching number of the subgraph induced by ``alive``."""
    return _kernels.matching_size(g.n, g.adj, -1 if alive is None else alive)


def matching_number(g: Graph) -> Matching:
    """Maximum matching size with the lexicographically first maximum matching.

    The witness is built edge by edge in canonical edge order: an edge is kept
    when both endpoints are still free and deleting them lowers the matching
    number of what is left by exactly one.
    """
    n, adj = g.n, g.adj
    size = _kernels.matching_size(n, adj)
    alive = g.full_mask
    remaining = size
    chosen: list[tuple[int, int]] = []
    for i, j in g.edge_indices:
        if remaining == 0:
            break
        if not (alive >> i & 1 and alive >> j & 1):
            continue
        rest = alive & ~((1 << i) | (1 << j))
        if _kernels.matching_size(n, adj, rest) == remaining - 1:
            chosen.append((i, j))
            alive = rest
            remaining -= 1
    vs = g.vertices
    return Matching(size, tuple((vs[i], vs[j]) for i, j in chosen))


def is_factor_critical(g: Graph) -> bool:
    if not is_connected(g):
        raise InputError("graph is disconnected")
    return _kernels.factor_critical(g.n, g.adj)


def is_factor_critical_mask(g: Graph, mask: int) -> bool:
    """Factor-criticality of the induced subgraph; ``False`` when it is disconnected."""
    return _kernels.factor_critical(g.n, g.adj, mask)


def is_matching_critical_mask(g: Graph, mask: int) -> bool:
    return all(_kernels.factor_critical(g.n, g.adj, c) for c in components_mask(g, mask))


def is_matching_critical(g: Graph, s: Iterable[Label] | None = None) -> bool:
    """Every connected component of the induced subgraph is factor-critical."""
    mask = g.full_mask if s is None else g.mask(s)
    return is_matching_critical_mask(g, mask)


def gallai_edmonds_mask(g: Graph, alive: int | None = None) -> tuple[int, int, int]:
    alive = g.full_mask if alive is None else alive
    nu = nu_mask(g, alive)
    d = 0
    for v in iter_bits(alive):
        if nu_mask(g, alive & ~(1 << v)) == nu:
            d |= 1 << v
    a = neighbors_mask(g, d) & alive & ~d
    c = alive & ~d & ~a
    return d, a, c


def gallai_edmonds(g: Graph) -> GEPartition:
    d, a, c = gallai_edmonds_mask(g)
    # structure theorem: every component of G[D] is factor-critical
    assert all(is_factor_critical_mask(g, comp) for comp in components_mask(g, d))
    return GEPartition(g.labels(d), g.labels(a), g.labels(c))
