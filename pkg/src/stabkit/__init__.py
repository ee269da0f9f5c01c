"""Associated primes of powers of edge ideals.

The graph side computes ``Ass(I_G^k)`` and the stability indices from ear
decompositions, factor-critical replication and dominant* vertex sets; the
:mod:`stabkit.oracle` module recomputes the same primes straight from the
ideal for cross-checking.
"""

from __future__ import annotations

from ._kernels import BACKEND
from .ears import (
    CriticalMaking,
    Ear,
    EarDecomposition,
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
from .errors import DomainError, InputError, ParseError, ResourceLimitError, StabkitError
from .graph import Graph, bridges, connected_components, has_odd_cycle, is_independent, neighbors, parse_edge_list
from .limits import Limits, default_limits
from .matching import GEPartition, Matching, gallai_edmonds, is_factor_critical, is_matching_critical, matching_number
from .oracle import MonomialIdeal, associated_primes, colon_by_monomial, edge_ideal, irreducible_decomposition, power
from .replication import (
    FactorCritical,
    MinReplication,
    make_factor_critical,
    min_replication_to_matching_critical,
    replicate,
)
from .stab import (
    DominantStarFamily,
    StabBounds,
    StabReport,
    analyze,
    ass_powers,
    astab,
    astab_for_prime,
    check_irreducible_component,
    dominant_star_sets,
    dstab,
    reduce_component,
    stab_bounds,
    stable_embedded_primes,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CriticalMaking",
    "DomainError",
    "DominantStarFamily",
    "Ear",
    "EarDecomposition",
    "FactorCritical",
    "GEPartition",
    "Graph",
    "InputError",
    "Limits",
    "Matching",
    "MinReplication",
    "MonomialIdeal",
    "ParseError",
    "ResourceLimitError",
    "StabBounds",
    "StabReport",
    "StabkitError",
    "analyze",
    "ass_powers",
    "associated_primes",
    "astab",
    "astab_for_prime",
    "bridges",
    "check_irreducible_component",
    "colon_by_monomial",
    "connected_components",
    "contract",
    "default_limits",
    "dominant_star_sets",
    "dstab",
    "ear_count",
    "edge_ideal",
    "gallai_edmonds",
    "generalized_ear_decomposition",
    "has_odd_cycle",
    "irreducible_decomposition",
    "is_factor_critical",
    "is_independent",
    "is_matching_critical",
    "make_factor_critical",
    "matching_number",
    "min_critical_making",
    "min_replication_to_matching_critical",
    "neighbors",
    "nu_star",
    "optimal_decomposition_search",
    "optimal_generalized_decomposition",
    "parse_edge_list",
    "phi_psi",
    "power",
    "reduce_component",
    "replicate",
    "stab_bounds",
    "stable_embedded_primes",
    "subdivide",
]
