"""
彩色モジュール

縮退順序と頂点彩色、proper 辺彩色、strong 辺彩色パイプライン、χ'_s オラクル。
"""

from .degeneracy import (
    DegeneracyFailure, DegeneracyOrdering, degeneracy_ordering, greedy_color, min_degree_witness
)
from .edge_coloring import (
    BudgetExceeded, Infeasible, chromatic_index_coloring, default_budget_nodes,
    edge_color_exact, edge_color_vizing
)
from .oracle import OracleResult, TightnessReport, default_oracle_cap, exact_chi_s, tightness_audit
from .strong_coloring import (
    ClassStats, ConflictGraph, StrongColoringReport, Valid, Violation, conflict_graph,
    is_proper_on_conflict_graph, strong_color_bound, strong_color_chordless, strong_color_paths_cycles,
    verify_strong
)

__all__ = [
    'DegeneracyOrdering', 'DegeneracyFailure', 'degeneracy_ordering', 'greedy_color', 'min_degree_witness',
    'Infeasible', 'BudgetExceeded', 'edge_color_exact', 'edge_color_vizing', 'chromatic_index_coloring',
    'default_budget_nodes',
    'ConflictGraph', 'Valid', 'Violation', 'ClassStats', 'StrongColoringReport',
    'conflict_graph', 'verify_strong', 'is_proper_on_conflict_graph',
    'strong_color_chordless', 'strong_color_paths_cycles', 'strong_color_bound',
    'OracleResult', 'TightnessReport', 'exact_chi_s', 'tightness_audit', 'default_oracle_cap',
]
