"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when
``STABKIT_PURE_PYTHON=1`` is set, the pure-Python twin takes over.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("STABKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
max_matching = _impl.max_matching
matching_size = _impl.matching_size
factor_critical = _impl.factor_critical
quotient_adjacency = _impl.quotient_adjacency
min_contraction = _impl.min_contraction
odd_cover_table = _impl.odd_cover_table
dominant_sets = _impl.dominant_sets

__all__ = [
    "BACKEND",
    "max_matching",
    "matching_size",
    "factor_critical",
    "quotient_adjacency",
    "min_contraction",
    "odd_cover_table",
    "dominant_sets",
]
