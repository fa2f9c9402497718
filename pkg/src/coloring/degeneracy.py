"""
k-縮退の剥離順序と貪欲頂点彩色

剥離は「次数最小、同次数なら ID 最小」の頂点を繰り返し取り除く。
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Sequence, Tuple, Union

import networkx as nx

from src.models import Graph, VertexColoring

logger = logging.getLogger(__name__)


@dataclass
class DegeneracyOrdering:
    """
    k-縮退を証明する剥離順序

    ordering[i] は、それより後ろの頂点のうち高々 k 個としか隣接しない。
    """

    ordering: Tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k は 0 以上で指定してください（現在値: {self.k}）")
        self.ordering = tuple(self.ordering)

    def is_valid_for(self, g: Graph) -> bool:
        """g の頂点の置換であり、各頂点の後方次数が k 以下か"""
        if sorted(self.ordering) != list(g.vertices()):
            return False
        position = {v: i for i, v in enumerate(self.ordering)}
        return all(
            sum(1 for w in g.neighbors(v) if position[w] > i) <= self.k
            for i, v in enumerate(self.ordering)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {'ordering': list(self.ordering), 'k': self.k}


@dataclass
class DegeneracyFailure:
    """剥離が止まった極大コア（最小次数 > k の頂点集合）"""

    core: FrozenSet[int]
    k: int
    min_degree: int

    def verify(self, g: Graph) -> bool:
        """core が空でなく、誘導部分グラフの最小次数が k を超えるか"""
        if not self.core:
            return False
        return all(
            sum(1 for w in g.neighbors(v) if w in self.core) > self.k
            for v in self.core
        )

    def to_dict(self) -> Dict[str, Any]:
        return {'core': sorted(self.core), 'k': self.k, 'min_degree': self.min_degree}


def degeneracy_ordering(g: Graph, k: int) -> Union[DegeneracyOrdering, DegeneracyFailure]:
    """
    k-縮退の剥離順序を求める

    パラメータ:
        g (Graph): 対象グラフ
        k (int): 次数の上限

    戻り値:
        DegeneracyOrdering: 成功時
        DegeneracyFailure: 次数 k 以下の頂点がなくなった時点の残りの頂点
    """
    if k < 0:
        raise ValueError(f"k は 0 以上で指定してください（現在値: {k}）")

    degree = [g.degree(v) for v in g.vertices()]
    removed = [False] * g.n
    heap = [(degree[v], v) for v in g.vertices()]
    heapq.heapify(heap)
    ordering: List[int] = []

    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        if d > k:
            core = frozenset(u for u in g.vertices() if not removed[u])
            logger.debug("剥離失敗: k=%d, コア %d 頂点（最小次数 %d）", k, len(core), d)
            return DegeneracyFailure(core=core, k=k, min_degree=d)
        removed[v] = True
        ordering.append(v)
        for w in g.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))

    return DegeneracyOrdering(ordering=tuple(ordering), k=k)


def greedy_color(g: Graph, order: Union[DegeneracyOrdering, Sequence[int]]) -> VertexColoring:
    """
    剥離順序の逆順に、隣接済み頂点で未使用の最小の色を割り当てる

    パラメータ:
        g (Graph): 対象グラフ
        order: DegeneracyOrdering または頂点列

    戻り値:
        VertexColoring: proper な頂点彩色（色は 0 始まり）

    例外:
        ValueError: order が V(g) の置換でない場合
    """
    sequence = order.ordering if isinstance(order, DegeneracyOrdering) else tuple(order)
    if sorted(sequence) != list(g.vertices()):
        raise ValueError("順序が頂点集合の置換ではありません")

    assignment = nx.coloring.greedy_color(g.to_networkx(), strategy=lambda _g, _colors: reversed(sequence))
    return VertexColoring(colors=tuple(assignment[v] for v in g.vertices()))


def min_degree_witness(g: Graph) -> List[Tuple[int, int]]:
    """次数 2 以下の全頂点を (頂点, 次数) で返す"""
    return [(v, g.degree(v)) for v in g.vertices() if g.degree(v) <= 2]
