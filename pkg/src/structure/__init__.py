"""
構造モジュール

ブロック分解、局所 2 連結性、chordless 判定、性質 P の検査。
"""

from .blocks import (
    Block, BlockDecomposition, LeafblockReport, blocks, is_connected, is_two_connected,
    leafblock_component_check, leafblocks, remove_leafblock_interiors
)
from .cycles import (
    ChordlessReport, ChordWitness, CommonCycleAnswer, EdgeRemovalReport, MengerPathPair,
    chord_cycle, edge_removal_report, in_common_cycle, in_common_cycle_by_flow, is_chord_edge,
    is_chordless, is_minimally_2connected, menger_pair
)
from .property_p import PropertyPReport, check_property_P

__all__ = [
    'Block', 'BlockDecomposition', 'LeafblockReport', 'blocks', 'leafblocks',
    'is_two_connected', 'is_connected', 'remove_leafblock_interiors', 'leafblock_component_check',
    'CommonCycleAnswer', 'ChordWitness', 'ChordlessReport', 'MengerPathPair', 'EdgeRemovalReport',
    'in_common_cycle', 'in_common_cycle_by_flow', 'is_chord_edge', 'chord_cycle', 'is_chordless',
    'is_minimally_2connected', 'menger_pair', 'edge_removal_report',
    'PropertyPReport', 'check_property_P',
]
