"""
テスト共通のグラフ
"""

import networkx as nx
import pytest

from src.data_sources import tightness_graph
from src.models import Graph


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def star(leaves: int) -> Graph:
    return Graph.from_networkx(nx.star_graph(leaves))


def two_triangles() -> Graph:
    """頂点 2 を共有する 2 つの三角形"""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def red_example() -> Graph:
    """
    p q r s t u w x = 0..7、M = {pq, rs, tu, wx} に pr, qt, qw を追加したグラフ
    """
    edges = [(0, 1), (2, 3), (4, 5), (6, 7), (0, 2), (1, 4), (1, 6)]
    return Graph.from_edges(edges, labels=['p', 'q', 'r', 's', 't', 'u', 'w', 'x'])


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def tightness3() -> Graph:
    return tightness_graph(3)
