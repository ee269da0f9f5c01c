"""Enumeration caps.

Every exponential search in the package consults a :class:`Limits` value.
Defaults can be overridden through the ``STABKIT_LIMITS`` environment
variable, e.g. ``STABKIT_LIMITS="max_vertices=20,max_subset_size=8"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ParseError

ENV_VAR = "STABKIT_LIMITS"


@dataclass(frozen=True)
class Limits:
    max_vertices: int = 24
    """Largest graph accepted by subset-enumerating operations."""
    max_subset_size: int = 6
    """Largest number of non-bridge edges tried by critical-making searches."""
    max_oracle_vertices: int = 10
    max_oracle_power: int = 4
    max_components: int = 200_000
    """Cap on irreducible components produced during oracle splitting."""
    max_corpus_size: int = 7
    max_replication_extra: int = 8
    """Largest |a| tried by the exhaustive replication search."""

    def override(self, **kwargs: int | None) -> Limits:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def parse_limits(text: str, base: Limits | None = None) -> Limits:
    base = base or Limits()
    names = {f.name for f in fields(Limits)}
    updates: dict[str, int] = {}
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in names:
            raise ParseError(f"bad {ENV_VAR} entry: {item!r}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise ParseError(f"bad {ENV_VAR} value: {item!r}") from None
    return replace(base, **updates)


def default_limits() -> Limits:
    text = os.environ.get(ENV_VAR)
    return parse_limits(text) if text else Limits()
