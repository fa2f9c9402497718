"""データソースモジュール（エッジリスト / JSON の入出力とグラフ生成器）"""

from .edge_list_source import EdgeListSource, load_edge_list, serialize_edge_list
from .generators import (
    FAMILIES, GeneratorSpec, add_random_chord, full_subdivision, generate, random_tree, tightness_graph
)

__all__ = [
    'EdgeListSource', 'load_edge_list', 'serialize_edge_list',
    'FAMILIES', 'GeneratorSpec', 'generate', 'tightness_graph', 'full_subdivision',
    'random_tree', 'add_random_chord',
]
