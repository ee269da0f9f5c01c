"""Monomial ideals: products, colons and irreducible decomposition by generator splitting.

This module is the independent check on the graph-theoretic formulas: it
computes ``Ass(I_G^k)`` straight from the ideal, without any graph theory.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence

from .errors import InputError, ResourceLimitError
from .graph import Graph, Label, format_label
from .limits import Limits, default_limits

Monomial = tuple[int, ...]


# Exponent vectors are packed one byte per variable so that a componentwise
# comparison is a single subtraction: with the guard bit of every byte set in
# ``y``, ``(y | H) - x`` keeps all guards iff ``x <= y`` coordinatewise.
_FIELD = 8
_INF = 127


def _guards(n: int) -> int:
    return int.from_bytes(b"\x80" * n, "little")


def _pack(m: Sequence[int], zero: int = 0) -> int:
    out = 0
    for i, e in enumerate(m):
        out |= (e or zero) << (_FIELD * i)
    return out


def _packable(ms: Iterable[Monomial]) -> bool:
    return all(e < _INF for m in ms for e in m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another one."""
    ordered = sorted(set(gens), key=lambda x: (sum(x), x))
    kept: list[Monomial] = []
    if ordered and _packable(ordered):
        h = _guards(len(ordered[0]))
        packed: list[int] = []
        for m in ordered:
            y = _pack(m) | h
            if not any((y - x) & h == h for x in packed):
                kept.append(m)
                packed.append(_pack(m))
    else:
        for m in ordered:
            if not any(divides(k, m) for k in kept):
                kept.append(m)
    return tuple(sorted(kept))


class MonomialIdeal:
    """Ideal in ``K[x_v : v in variables]`` given by its minimal monomial generators."""

    __slots__ = ("variables", "generators")

    def __init__(self, variables: Sequence[Label], generators: Iterable[Sequence[int]]) -> None:
        self.variables = tuple(variables)
        gens = []
        for m in generators:
            m = tuple(int(e) for e in m)
            if len(m) != len(self.variables) or any(e < 0 for e in m):
                raise InputError(f"bad exponent vector {m!r}")
            gens.append(m)
        self.generators: tuple[Monomial, ...] = minimize(gens)

    @property
    def is_unit(self) -> bool:
        return any(not any(m) for m in self.generators)

    def contains(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.variables, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.to_text()})"

    def to_text(self) -> str:
        return "(" + ", ".join(monomial_text(self.variables, m) for m in self.generators) + ")"

    def to_json_obj(self) -> dict:
        return {
            "variables": [format_label(v) for v in self.variables],
            "generators": [list(m) for m in self.generators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> MonomialIdeal:
        return cls(obj["variables"], obj["generators"])


def monomial_text(variables: Sequence[Label], m: Sequence[int]) -> str:
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(format_label(v))
        elif e > 1:
            parts.append(f"{format_label(v)}^{e}")
    return "*".join(parts) if parts else "1"


def irreducible_text(variables: Sequence[Label], a: Sequence[int]) -> str:
    """``m^a`` as the list of its pure-power generators, e.g. ``(x^2, y^2, z^2)``."""
    parts = [format_label(v) if e == 1 else f"{format_label(v)}^{e}" for v, e in zip(variables, a) if e]
    return "(" + ", ".join(parts) + ")"


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = []
    for i, j in g.edge_indices:
        m = [0] * g.n
        m[i] = m[j] = 1
        gens.append(m)
    return MonomialIdeal(g.vertices, gens)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.variables != b.variables:
        raise InputError("ideals live in different rings")
    gens = {tuple(x + y for x, y in zip(p, q)) for p in a.generators for q in b.generators}
    return MonomialIdeal(a.variables, gens)


def power(j: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise InputError("power needs k >= 1")
    out = j
    for _ in range(k - 1):
        out = product(out, j)
    return out


def colon_by_monomial(j: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """``(J : m)`` is generated by ``g / gcd(g, m)``."""
    m = tuple(m)
    if len(m) != len(j.variables):
        raise InputError("monomial has the wrong number of variables")
    return MonomialIdeal(j.variables, (tuple(max(x - y, 0) for x, y in zip(g, m)) for g in j.generators))


def _contained(b: Monomial, a: Monomial) -> bool:
    """``m^b`` is inside ``m^a`` (a zero exponent means the variable is absent)."""
    return all(not y or 0 < x <= y for x, y in zip(a, b))


def minimal_components(comps: Iterable[Monomial]) -> list[Monomial]:
    """Keep the components that contain no other one; the rest are redundant in the intersection."""
    comps = sorted(set(comps))
    if not comps or not _packable(comps):
        return [a for a in comps if not any(b != a and _contained(b, a) for b in comps)]
    # m^b inside m^a is a <= b coordinatewise once absent variables count as infinite
    h = _guards(len(comps[0]))
    packed = [_pack(a, _INF) for a in comps]
    out = []
    for i, a in enumerate(comps):
        x = packed[i]
        if not any(j != i and ((y | h) - x) & h == h for j, y in enumerate(packed)):
            out.append(a)
    return out


class _Splitter:
    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.memo: dict[tuple[Monomial, ...], tuple[Monomial, ...]] = {}

    def run(self, gens: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
        hit = self.memo.get(gens)
        if hit is not None:
            return hit
        impure = [m for m in gens if sum(1 for e in m if e) > 1]
        if not impure:
            n = len(gens[0]) if gens else 0
            a = [0] * n
            for m in gens:
                for i, e in enumerate(m):
                    if e:
                        a[i] = e
            result: tuple[Monomial, ...] = (tuple(a),)
        else:
            m = min(impure)
            top = max(m)
            i = m.index(top)
            pure = tuple(top if t == i else 0 for t in range(len(m)))
            rest = tuple(0 if t == i else e for t, e in enumerate(m))
            others = [x for x in gens if x != m]
            left = self.run(minimize(others + [pure]))
            right = self.run(minimize(others + [rest]))
            result = tuple(minimal_components(left + right))
            if len(result) > self.cap:
                raise ResourceLimitError(f"more than {self.cap} irreducible components")
        self.memo[gens] = result
        return result


def irreducible_decomposition(j: MonomialIdeal, limits: Limits | None = None) -> list[Monomial]:
    """Irredundant irreducible components ``m^a`` of ``J`` as exponent vectors ``a``.

    Split on the first impure generator (lexicographic), peeling off the
    power of its largest-exponent variable:
    ``(J', x^e m') = (J', x^e) + (J', m')`` as an intersection.
    """
    limits = limits or default_limits()
    if len(j.variables) > limits.max_oracle_vertices:
        raise ResourceLimitError(
            f"{len(j.variables)} variables exceed max_oracle_vertices={limits.max_oracle_vertices}"
        )
    if not j.generators:
        raise InputError("zero ideal has no irreducible decomposition")
    if j.is_unit:
        return []
    return sorted(_Splitter(limits.max_components).run(j.generators))


def associated_primes(j: MonomialIdeal, limits: Limits | None = None) -> set[frozenset]:
    """Supports of the irredundant irreducible components, as sets of variable labels."""
    vs = j.variables
    return {frozenset(vs[i] for i, e in enumerate(a) if e) for a in irreducible_decomposition(j, limits)}


def intersect_contains(components: Iterable[Monomial], m: Sequence[int]) -> bool:
    """Membership of ``x^m`` in the intersection of the given ``m^a``."""
    return all(any(e and x >= e for x, e in zip(m, a)) for a in components)


def edge_power_primes(g: Graph, k: int, limits: Limits | None = None) -> set[frozenset]:
    """``Ass(I_G^k)`` computed from the ideal alone."""
    limits = limits or default_limits()
    if k > limits.max_oracle_power:
        raise ResourceLimitError(f"k={k} exceeds max_oracle_power={limits.max_oracle_power}")
    return associated_primes(power(edge_ideal(g), k), limits)
