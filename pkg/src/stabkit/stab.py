"""Dominant* families, stability indices of edge-ideal powers and their upper bounds.

Every prime ``U`` is handled through its complement ``Z = V - U``.  A set
``W`` is U-dominant* when ``W`` avoids ``Z | N(Z)``, ``N(W) | N(Z) | Z = V``
and every component of ``G_W`` has an odd cycle.  The empty set qualifies
only when ``Z | N(Z)`` already covers ``V``.  Then

* ``astab(I, U) = 1 + min nu*(G_W)`` over the family, absent if it is empty,
* ``U`` is associated to ``I^k`` iff ``astab(I, U) <= k``,
* ``dstab`` is the value at ``U = V`` and ``astab`` the largest finite value.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from . import _kernels
from .ears import nu_star_mask
from .errors import DomainError, InputError, ResourceLimitError
from .graph import (
    Graph,
    Label,
    bridge_keys,
    format_label,
    is_independent_mask,
    iter_bits,
    neighbors_mask,
    odd_girth,
    require_connected_nonbipartite,
)
from .limits import Limits, default_limits
from .matching import gallai_edmonds_mask, nu_mask
from .replication import VectorLike, as_vector, replicate, support_mask

# largest graph the compiled odd-cover table accepts
_TABLE_MAX = 30


@dataclass(frozen=True)
class DominantStarFamily:
    """``D*(U)`` with the ``nu*`` value of each member."""

    base: frozenset
    zee: frozenset
    members: tuple[tuple[frozenset, int], ...]

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def astab(self) -> int | None:
        return 1 + min(nu for _, nu in self.members) if self.members else None

    def __contains__(self, w: object) -> bool:
        return any(m == w for m, _ in self.members)

    def nu_of(self, w: Iterable[Label]) -> int:
        w = frozenset(w)
        for m, nu in self.members:
            if m == w:
                return nu
        raise KeyError(w)


class StabBounds(NamedTuple):
    dstab_bound: int
    astab_bound: int


class _Analyzer:
    """Shared state for one graph: the odd-cover table and the ``nu*`` memo."""

    def __init__(self, g: Graph, limits: Limits | None = None) -> None:
        self.g = g
        self.limits = limits or default_limits()
        cap = min(self.limits.max_vertices, _TABLE_MAX)
        if g.n > cap:
            raise ResourceLimitError(f"{g.n} vertices exceed max_vertices={cap}")
        self.table = _kernels.odd_cover_table(g.n, g.adj)
        self.nu_memo: dict[int, int] = {}

    def nu_star(self, w: int) -> int:
        hit = self.nu_memo.get(w)
        if hit is None:
            hit = self.nu_memo[w] = nu_star_mask(self.g, w, self.limits)
        return hit

    def free(self, z: int) -> int:
        return self.g.full_mask & ~(z | neighbors_mask(self.g, z))

    def members(self, z: int) -> list[int]:
        """Member masks of ``D*(V - Z)``, ``0`` standing for the empty set."""
        g = self.g
        if not is_independent_mask(g, z):
            return []
        if not self.free(z):
            return [0]
        return _kernels.dominant_sets(g.n, g.adj, z, self.table)

    def astab_z(self, z: int) -> int | None:
        ws = self.members(z)
        if not ws:
            return None
        if ws == [0]:
            return 1
        # nu* >= nu, so members are visited by increasing matching number
        # and the scan stops once no member can beat the best value
        keyed = sorted((nu_mask(self.g, w), w) for w in ws)
        best: int | None = None
        for lb, w in keyed:
            if best is not None and lb >= best:
                break
            val = self.nu_star(w)
            if best is None or val < best:
                best = val
        assert best is not None
        return 1 + best

    def independent_sets(self) -> Iterator[int]:
        """Every independent set (the empty one included), by branch and bound on bitmasks."""
        adj = self.g.adj
        stack = [(0, self.g.full_mask)]
        while stack:
            z, cand = stack.pop()
            yield z
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                stack.append((z | low, cand & ~adj[v]))

    def per_prime(self) -> dict[int, int | None]:
        """``Z`` mask to ``astab(I, V - Z)`` over all independent ``Z``."""
        return {z: self.astab_z(z) for z in sorted(self.independent_sets())}


def _complement_mask(g: Graph, u: Iterable[Label]) -> int:
    return g.full_mask & ~g.mask(u)


def dominant_star_sets(g: Graph, u: Iterable[Label], limits: Limits | None = None) -> DominantStarFamily:
    """Full enumeration of ``D*(U)``; empty when ``V - U`` is not independent."""
    require_connected_nonbipartite(g)
    an = _Analyzer(g, limits)
    umask = g.mask(u)
    z = g.full_mask & ~umask
    members = tuple((g.labels(w), an.nu_star(w)) for w in an.members(z))
    return DominantStarFamily(g.labels(umask), g.labels(z), members)


def astab_for_prime(g: Graph, u: Iterable[Label], limits: Limits | None = None) -> int | None:
    """``astab(I, U)``; ``None`` when ``U`` is never associated."""
    require_connected_nonbipartite(g)
    return _Analyzer(g, limits).astab_z(_complement_mask(g, u))


def ass_powers(g: Graph, k: int, limits: Limits | None = None) -> set[frozenset]:
    """``Ass(I^k)`` as a set of vertex sets."""
    if k < 1:
        raise InputError("k must be at least 1")
    require_connected_nonbipartite(g)
    table = _Analyzer(g, limits).per_prime()
    return {g.labels(g.full_mask & ~z) for z, a in table.items() if a is not None and a <= k}


def stable_embedded_primes(g: Graph, limits: Limits | None = None) -> set[frozenset]:
    """``U`` with independent complement ``Z``, ``U != N(Z)``, and only non-bipartite
    components on ``U - N(Z)``."""
    require_connected_nonbipartite(g)
    an = _Analyzer(g, limits)
    out = set()
    for z in an.independent_sets():
        rest = an.free(z)
        if rest and an.table[rest]:
            # U - N(Z) is then itself U-dominant*
            assert not rest & ~neighbors_mask(g, rest)
            out.add(g.labels(g.full_mask & ~z))
    return out


def dstab(g: Graph, limits: Limits | None = None) -> int:
    require_connected_nonbipartite(g)
    value = _Analyzer(g, limits).astab_z(0)
    assert value is not None, "V is always dominant* for itself"
    return value


def astab(g: Graph, limits: Limits | None = None) -> int:
    require_connected_nonbipartite(g)
    table = _Analyzer(g, limits).per_prime()
    value = max(a for a in table.values() if a is not None)
    assert table[0] is not None and table[0] <= value
    return value


def stab_bounds(g: Graph) -> StabBounds:
    """``(floor((|E| + psi - 1) / 2) + 1, |E| - k + 1)`` with ``2k - 1`` the odd girth."""
    require_connected_nonbipartite(g)
    psi = len(bridge_keys(g))
    girth = odd_girth(g)
    assert girth is not None
    return StabBounds((g.m + psi - 1) // 2 + 1, g.m - (girth + 1) // 2 + 1)


def loose_dstab_bound(g: Graph) -> int:
    """The weaker ``floor((|E| + psi) / 2) + 1``."""
    require_connected_nonbipartite(g)
    return (g.m + len(bridge_keys(g))) // 2 + 1


# -- irreducible components -------------------------------------------------------


def reduce_component(
    g: Graph, a: VectorLike, u: Iterable[Label], k: int
) -> tuple[tuple[int, ...], int]:
    """Drop the part of ``a`` sitting on ``N(Z)``: returns ``(b, k - |c|)``."""
    vec = as_vector(g, a)
    umask = g.mask(u)
    if support_mask(vec) & ~umask:
        raise InputError("support of a must lie inside U")
    nz = neighbors_mask(g, g.full_mask & ~umask)
    b = tuple(0 if nz >> i & 1 else x for i, x in enumerate(vec))
    delta = sum(vec) - sum(b)
    if k - delta < 1:
        raise DomainError(f"k - delta = {k - delta} < 1")
    return b, k - delta


def check_irreducible_component(g: Graph, a: VectorLike, u: Iterable[Label], k: int) -> bool:
    """Whether ``m^{a + 1_U}`` is an embedded irreducible component of ``I^k``.

    Checks: ``Z`` independent, ``nu(p_a) = k - 1``, the vertices of ``D(p_a)``
    together with ``Z | N(Z)`` dominate ``V`` and ``C(p_a)`` is empty.
    """
    vec = as_vector(g, a)
    umask = g.mask(u)
    sup = support_mask(vec)
    if not sup:
        raise InputError("a must be nonzero")
    if sup & ~umask:
        raise InputError("support of a must lie inside U")
    z = g.full_mask & ~umask
    nz = neighbors_mask(g, z)
    if sup & nz:
        raise InputError("support of a meets N(Z); reduce the component first")
    if k < 1:
        raise InputError("k must be at least 1")
    if not is_independent_mask(g, z):
        return False
    s = replicate(g, vec)
    if nu_mask(s) != k - 1:
        return False
    d, _, c = gallai_edmonds_mask(s)
    if c:
        return False
    d_orig = g.mask({s.vertices[i][0] for i in iter_bits(d)})
    return (neighbors_mask(g, d_orig) | z | nz) == g.full_mask


# -- report -----------------------------------------------------------------------


def _sorted_labels(g: Graph, s: Iterable[Label]) -> list[str]:
    return [format_label(v) for v in g.sort_labels(s)]


@dataclass(frozen=True)
class StabReport:
    astab: int
    dstab: int
    per_prime: tuple[tuple[tuple[str, ...], int | None], ...]
    """``(U, astab(I, U))`` for every ``U`` with independent complement; ``None`` means never."""
    ass_by_power: Mapping[int, tuple[tuple[str, ...], ...]]
    stable_ass: tuple[tuple[str, ...], ...]
    bounds: Mapping[str, int] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "astab": self.astab,
            "dstab": self.dstab,
            "perPrime": [{"U": list(u), "astab": a} for u, a in self.per_prime],
            "assByPower": {str(k): [list(u) for u in v] for k, v in sorted(self.ass_by_power.items())},
            "stableAss": [list(u) for u in self.stable_ass],
            "bounds": dict(self.bounds),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> StabReport:
        return cls(
            astab=obj["astab"],
            dstab=obj["dstab"],
            per_prime=tuple((tuple(p["U"]), p["astab"]) for p in obj["perPrime"]),
            ass_by_power={int(k): tuple(tuple(u) for u in v) for k, v in obj["assByPower"].items()},
            stable_ass=tuple(tuple(u) for u in obj["stableAss"]),
            bounds=dict(obj["bounds"]),
        )

    @classmethod
    def from_json(cls, text: str) -> StabReport:
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        lines = [f"astab = {self.astab}", f"dstab = {self.dstab}"]
        lines += [f"{name} = {value}" for name, value in sorted(self.bounds.items())]
        for k, primes in sorted(self.ass_by_power.items()):
            lines.append(f"Ass(I^{k}): {len(primes)} primes")
            lines += ["  {" + ", ".join(u) + "}" for u in primes]
        lines.append("astab per prime:")
        lines += ["  {" + ", ".join(u) + "}: " + ("never" if a is None else str(a)) for u, a in self.per_prime]
        return "\n".join(lines) + "\n"


def _prime_key(g: Graph, u: frozenset) -> tuple:
    # larger primes first, then canonical vertex order
    return (-len(u), sorted(g.index(v) for v in u))


def analyze(g: Graph, k_max: int | None = None, limits: Limits | None = None) -> StabReport:
    """Everything at once: per-prime indices, the Ass chain up to ``max(astab, k_max)``, bounds."""
    require_connected_nonbipartite(g)
    an = _Analyzer(g, limits)
    table = an.per_prime()
    finite = {z: a for z, a in table.items() if a is not None}
    a_val = max(finite.values())
    d_val = finite[0]
    assert d_val <= a_val
    top = max(a_val, k_max or 0)
    primes = sorted(((g.labels(g.full_mask & ~z), a) for z, a in table.items()), key=lambda p: _prime_key(g, p[0]))
    by_power = {}
    for k in range(1, top + 1):
        us = [u for u, a in primes if a is not None and a <= k]
        by_power[k] = tuple(tuple(_sorted_labels(g, u)) for u in us)
    stable = by_power[a_val]
    bnd = stab_bounds(g)
    assert d_val <= bnd.dstab_bound and a_val <= bnd.astab_bound
    bounds = {
        "dstabBound": bnd.dstab_bound,
        "dstabBoundLoose": loose_dstab_bound(g),
        "astabBound": bnd.astab_bound,
    }
    return StabReport(
        astab=a_val,
        dstab=d_val,
        per_prime=tuple((tuple(_sorted_labels(g, u)), a) for u, a in primes),
        ass_by_power=by_power,
        stable_ass=stable,
        bounds=bounds,
    )


def ass_chain(g: Graph, ks: Sequence[int], limits: Limits | None = None) -> dict[int, set[frozenset]]:
    """``Ass(I^k)`` for several ``k`` from a single enumeration."""
    if any(k < 1 for k in ks):
        raise InputError("k must be at least 1")
    require_connected_nonbipartite(g)
    table = _Analyzer(g, limits).per_prime()
    return {
        k: {g.labels(g.full_mask & ~z) for z, a in table.items() if a is not None and a <= k} for k in ks
    }


__all__ = [
    "DominantStarFamily",
    "StabBounds",
    "StabReport",
    "analyze",
    "ass_chain",
    "ass_powers",
    "astab",
    "astab_for_prime",
    "check_irreducible_component",
    "dominant_star_sets",
    "dstab",
    "loose_dstab_bound",
    "reduce_component",
    "stab_bounds",
    "stable_embedded_primes",
]
