"""
データモデルモジュール
"""

from .coloring import (
    ProperEdgeColoring, StrongEdgeColoring, VertexColoring, flatten_pair, unflatten_color
)
from .errors import (
    ColoringCoverageError, EdgeColoringError, GeneratorSpecError, GraphFormatError,
    InvalidVertexError, MatchingError, NotChordlessError
)
from .graph import EdgePair, Graph, SubgraphView, canonical_edge, induced_subgraph, max_degree
from .matching import Matching

__all__ = [
    'Graph', 'SubgraphView', 'EdgePair', 'canonical_edge', 'induced_subgraph', 'max_degree',
    'Matching',
    'ProperEdgeColoring', 'VertexColoring', 'StrongEdgeColoring', 'flatten_pair', 'unflatten_color',
    'GraphFormatError', 'InvalidVertexError', 'MatchingError', 'EdgeColoringError',
    'GeneratorSpecError', 'NotChordlessError', 'ColoringCoverageError',
]
