"""
Matching - ホストグラフ上のマッチング

辺彩色の色クラス E_i や任意のマッチング M を表す。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Tuple

from src.models.errors import MatchingError
from src.models.graph import EdgePair, Graph, canonical_edge


@dataclass(frozen=True)
class Matching:
    """
    端点を共有しない辺の集合

    【使用例】
    m = Matching(host=g, edges=frozenset({(0, 1), (2, 3)}))
    m.partner(0)   # 1
    """

    host: Graph
    edges: FrozenSet[EdgePair]

    partners: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        canonical = set()
        partners: Dict[int, int] = {}
        for edge in self.edges:
            try:
                u, v = canonical_edge(*edge)
            except ValueError as e:
                raise MatchingError(str(e)) from e
            if not self.host.has_edge(u, v):
                raise MatchingError(f"辺 {(u, v)} はホストグラフに存在しません")
            for w in (u, v):
                if w in partners:
                    raise MatchingError(f"頂点 {w} が複数のマッチング辺に含まれています")
            partners[u] = v
            partners[v] = u
            canonical.add((u, v))
        object.__setattr__(self, 'edges', frozenset(canonical))
        object.__setattr__(self, 'partners', partners)

    @classmethod
    def of(cls, host: Graph, edges: Iterable[Tuple[int, int]]) -> 'Matching':
        return cls(host=host, edges=frozenset(tuple(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[EdgePair]:
        return sorted(self.edges)

    def endpoints(self) -> List[int]:
        """V(G[M]) を昇順で返す"""
        return sorted(self.partners)

    def covers(self, v: int) -> bool:
        return v in self.partners

    def partner(self, v: int) -> int:
        if v not in self.partners:
            raise MatchingError(f"頂点 {v} はマッチングに含まれていません")
        return self.partners[v]

    def restrict(self, edges: Iterable[Tuple[int, int]]) -> 'Matching':
        """部分マッチング M' ⊆ M"""
        sub = frozenset(canonical_edge(*e) for e in edges)
        extra = sub - self.edges
        if extra:
            raise MatchingError(f"M に含まれない辺が指定されました: {sorted(extra)}")
        return Matching(host=self.host, edges=sub)

    def to_dict(self) -> Dict[str, Any]:
        return {'edges': [list(e) for e in self.sorted_edges()]}

    def __repr__(self) -> str:
        return f"Matching(size={len(self.edges)}, edges={self.sorted_edges()[:4]}...)"
