"""Exact small-graph toolkit for circumference, cycle counts and extremal constructions."""

from __future__ import annotations

from .budget import Budget
from .cycles import (
    Embedding,
    circumference,
    count_cliques,
    count_cycles,
    count_cycles_through,
    has_cycle_at_least,
    has_cycle_through_at_least,
    is_spanning_subgraph,
    oracle_count_cycles,
)
from .enumeration import EnumerationFilter, enumerate_graphs, naive_isomorphism_classes
from .errors import (
    BudgetExceeded,
    CapacityError,
    CirclabError,
    CountOverflowError,
    DomainError,
    Graph6Error,
    SpecError,
)
from .families import FamilyMeta, FamilySpec, build_family, family_catalog, h_graph
from .graph import (
    Graph,
    canonical_code,
    canonical_form,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    parse_graph6,
    write_graph6,
)
from .harness import (
    TheoremReport,
    classify_stability,
    compute_generalized_turan,
    explore_conjecture,
    luo_chain,
    turan_report,
    verify_dirac,
    verify_kopylov,
    verify_luo,
    verify_stability,
)

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CapacityError",
    "CirclabError",
    "CountOverflowError",
    "DomainError",
    "Embedding",
    "EnumerationFilter",
    "FamilyMeta",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "SpecError",
    "TheoremReport",
    "build_family",
    "canonical_code",
    "canonical_form",
    "circumference",
    "classify_stability",
    "complete_graph",
    "compute_generalized_turan",
    "count_cliques",
    "count_cycles",
    "count_cycles_through",
    "cycle_graph",
    "enumerate_graphs",
    "explore_conjecture",
    "family_catalog",
    "graph_from_edges",
    "h_graph",
    "has_cycle_at_least",
    "has_cycle_through_at_least",
    "is_spanning_subgraph",
    "luo_chain",
    "naive_isomorphism_classes",
    "oracle_count_cycles",
    "parse_graph6",
    "turan_report",
    "verify_dirac",
    "verify_kopylov",
    "verify_luo",
    "verify_stability",
    "write_graph6",
]
