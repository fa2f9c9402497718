"""
縮約モジュール

マッチング M から G[M] と G_M を構築し、G_M の辺を赤 / 青に分類する。
"""

from .contracted_graph import (
    BLUE, RED, ContractedGraph, EdgeClass, RedWitness, classify_edge, contract, contracted_induced,
    expand_path, induced_by_matching, matchings_from_edge_coloring, path_respects_quotient
)

__all__ = [
    'ContractedGraph', 'EdgeClass', 'RedWitness', 'RED', 'BLUE',
    'classify_edge', 'contract', 'contracted_induced', 'induced_by_matching',
    'expand_path', 'path_respects_quotient', 'matchings_from_edge_coloring',
]
