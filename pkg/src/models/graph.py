"""
Graph - 単純無向グラフのデータモデル

頂点 ID は 0..n-1 の連番。ラベルは任意のサイドテーブルとして保持する。
構築後は不変（frozen）で、スレッド間で共有してよい。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.models.errors import InvalidVertexError

# 正規形の辺 (min id, max id)
EdgePair = Tuple[int, int]


def canonical_edge(u: int, v: int) -> EdgePair:
    """
    辺を正規形 (min, max) に変換

    例外:
        ValueError: u == v（自己ループ）の場合
    """
    if u == v:
        raise ValueError(f"自己ループは許可されていません（頂点 {u}）")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    単純無向グラフ

    【使用例】
    g = Graph(n=3, edges=frozenset({(0, 1), (1, 2)}))
    g.degree(1)   # 2
    """

    n: int                                   # 頂点数
    edges: FrozenSet[EdgePair]               # 正規形の辺集合
    labels: Optional[Tuple[str, ...]] = None  # 頂点ラベル（任意）

    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n は 0 以上で指定してください（現在値: {self.n}）")

        canonical = set()
        for edge in self.edges:
            u, v = edge
            for w in (u, v):
                if not (0 <= w < self.n):
                    raise InvalidVertexError(f"頂点 {w} は範囲外です（n={self.n}）")
            canonical.add(canonical_edge(u, v))
        object.__setattr__(self, 'edges', frozenset(canonical))

        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in canonical:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, 'adjacency', tuple(tuple(sorted(nb)) for nb in neighbors))

        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.n:
                raise ValueError(f"labels の長さが n と一致しません（{len(labels)} != {self.n}）")
            object.__setattr__(self, 'labels', labels)

    # =====================================
    # 【基本情報】
    # =====================================

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Tuple[int, int]],
        n: Optional[int] = None,
        labels: Optional[Sequence[str]] = None
    ) -> 'Graph':
        """辺の列からグラフを作る（n 省略時は最大 ID + 1）"""
        edge_list = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edge_list), default=-1)
        return cls(n=n, edges=frozenset(edge_list), labels=tuple(labels) if labels is not None else None)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> List[EdgePair]:
        """辞書順に並べた辺のリスト"""
        return sorted(self.edges)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertexError(f"頂点 {v} は存在しません（n={self.n}）")

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return canonical_edge(u, v) in self.edges

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def label(self, v: int) -> str:
        self.check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    # =====================================
    # 【派生グラフ】
    # =====================================

    def without_edge(self, edge: Tuple[int, int]) -> 'Graph':
        """G - e（頂点集合はそのまま）"""
        e = canonical_edge(*edge)
        if e not in self.edges:
            raise ValueError(f"辺 {e} はグラフに存在しません")
        return Graph(n=self.n, edges=self.edges - {e}, labels=self.labels)

    def with_edge(self, edge: Tuple[int, int]) -> 'Graph':
        """G + e（頂点集合はそのまま）"""
        e = canonical_edge(*edge)
        for w in e:
            self.check_vertex(w)
        return Graph(n=self.n, edges=self.edges | {e}, labels=self.labels)

    def to_networkx(self) -> nx.Graph:
        """networkx.Graph に変換（頂点 ID はそのまま）"""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.sorted_edges())
        return nx_graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> 'Graph':
        """
        networkx.Graph から変換

        頂点はソート順に 0..n-1 へ振り直す。元の頂点が 0..n-1 の整数でない場合は
        str(元の頂点) をラベルとして残す。
        """
        nodes = sorted(nx_graph.nodes(), key=lambda x: (str(type(x)), x))
        index = {node: i for i, node in enumerate(nodes)}
        edges = frozenset(canonical_edge(index[u], index[v]) for u, v in nx_graph.edges() if u != v)
        labels = None
        if nodes != list(range(len(nodes))):
            labels = tuple(str(node) for node in nodes)
        return cls(n=len(nodes), edges=edges, labels=labels)

    def to_dict(self) -> Dict[str, Any]:
        """JSON エクスポート形式 {n, edges, labels}"""
        return {
            'n': self.n,
            'edges': [list(e) for e in self.sorted_edges()],
            'labels': list(self.labels) if self.labels is not None else None
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Graph':
        labels = data.get('labels')
        return cls(
            n=int(data['n']),
            edges=frozenset(canonical_edge(int(u), int(v)) for u, v in data.get('edges', [])),
            labels=tuple(labels) if labels is not None else None
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, Δ={self.max_degree()})"


@dataclass(frozen=True)
class SubgraphView:
    """
    誘導部分グラフと ID 対応表

    graph の頂点 i は元グラフの original_ids[i] に対応する。
    """

    graph: Graph
    original_ids: Tuple[int, ...]

    local_ids: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.original_ids) != self.graph.n:
            raise ValueError("original_ids の長さが頂点数と一致しません")
        object.__setattr__(self, 'local_ids', {orig: i for i, orig in enumerate(self.original_ids)})

    def to_original(self, v: int) -> int:
        return self.original_ids[v]

    def to_local(self, original: int) -> int:
        if original not in self.local_ids:
            raise InvalidVertexError(f"頂点 {original} は部分グラフに含まれていません")
        return self.local_ids[original]

    def original_edges(self) -> List[EdgePair]:
        """部分グラフの辺を元グラフの ID で返す"""
        return sorted(canonical_edge(self.original_ids[u], self.original_ids[v]) for u, v in self.graph.edges)


def max_degree(g: Graph) -> int:
    """最大次数 Δ（辺がなければ 0）"""
    return g.max_degree()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> SubgraphView:
    """
    G[X] を構築

    パラメータ:
        g (Graph): 元グラフ
        vertices (Iterable[int]): 頂点集合 X

    戻り値:
        SubgraphView: X の頂点を昇順に 0.. へ振り直した誘導部分グラフ

    例外:
        InvalidVertexError: X に存在しない頂点が含まれる場合
    """
    keep = sorted(set(vertices))
    for v in keep:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}

    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges
        if u in index and v in index
    )
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None

    return SubgraphView(graph=Graph(n=len(keep), edges=edges, labels=labels), original_ids=tuple(keep))
