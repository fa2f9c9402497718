"""
ブロック分解・リーフブロック・切断点

2 連結性の規約: K2（辺 1 本）は 2 連結、K1 は 2 連結ではない。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from src.models import Graph, SubgraphView, induced_subgraph
from src.models.graph import EdgePair, canonical_edge

logger = logging.getLogger(__name__)

# ブロック・カット木の頂点: ('block', ブロック ID) または ('cut', 頂点 ID)
TreeNode = Tuple[str, int]


@dataclass(frozen=True)
class Block:
    """ブロック（極大 2 連結部分グラフ。単一の辺を含む）"""

    id: int
    edges: FrozenSet[EdgePair]
    vertices: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def is_single_edge(self) -> bool:
        return len(self.edges) == 1


@dataclass
class BlockDecomposition:
    """
    ブロック分解

    blocks は E(G) を分割する。ブロック ID は辺の辞書順で正規化している。
    """

    graph: Graph
    blocks: List[Block]
    cutvertices: FrozenSet[int]
    tree: Dict[TreeNode, List[TreeNode]] = field(default_factory=dict)

    def blocks_of(self, v: int) -> List[int]:
        """頂点 v を含むブロック ID のリスト"""
        return [b.id for b in self.blocks if v in b.vertices]

    def shared_block(self, a: int, b: int, min_size: int = 1) -> Optional[Block]:
        """a, b を両方含み頂点数 min_size 以上のブロック（なければ None）"""
        for block in self.blocks:
            if a in block.vertices and b in block.vertices and block.size >= min_size:
                return block
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'blocks': [
                {'id': b.id, 'vertices': sorted(b.vertices), 'edges': [list(e) for e in sorted(b.edges)]}
                for b in self.blocks
            ],
            'cutvertices': sorted(self.cutvertices),
            'leafblocks': [r.to_dict() for r in leafblocks(self)]
        }


@dataclass(frozen=True)
class LeafblockReport:
    """リーフブロック（切断点をちょうど 1 つ含むブロック）"""

    block_id: int
    cutvertex: Optional[int]          # 成分全体が 1 ブロックの場合は None
    vertices: FrozenSet[int]

    def interior(self) -> FrozenSet[int]:
        """切断点を除いたブロックの頂点"""
        return self.vertices - {self.cutvertex}

    def to_dict(self) -> Dict[str, Any]:
        return {'block_id': self.block_id, 'cutvertex': self.cutvertex, 'vertices': sorted(self.vertices)}


def blocks(g: Graph) -> BlockDecomposition:
    """
    ブロック分解を計算（孤立点はブロックを作らない）

    パラメータ:
        g (Graph): 対象グラフ

    戻り値:
        BlockDecomposition: ブロック・切断点・ブロックカット木
    """
    nx_graph = g.to_networkx()
    components = [
        frozenset(canonical_edge(u, v) for u, v in component)
        for component in nx.biconnected_component_edges(nx_graph)
    ]
    components.sort(key=lambda edges: sorted(edges))

    block_list = []
    for i, edges in enumerate(components):
        vertices = frozenset(v for e in edges for v in e)
        block_list.append(Block(id=i, edges=edges, vertices=vertices))

    cutvertices = frozenset(nx.articulation_points(nx_graph))

    tree: Dict[TreeNode, List[TreeNode]] = {}
    for block in block_list:
        node = ('block', block.id)
        tree.setdefault(node, [])
        for v in sorted(block.vertices & cutvertices):
            tree[node].append(('cut', v))
            tree.setdefault(('cut', v), []).append(node)

    return BlockDecomposition(graph=g, blocks=block_list, cutvertices=cutvertices, tree=tree)


def leafblocks(d: BlockDecomposition) -> List[LeafblockReport]:
    """切断点をちょうど 1 つ含むブロックを列挙"""
    reports = []
    for block in d.blocks:
        cuts = sorted(block.vertices & d.cutvertices)
        if len(cuts) == 1:
            reports.append(LeafblockReport(block_id=block.id, cutvertex=cuts[0], vertices=block.vertices))
    return reports


def is_two_connected(g: Graph) -> bool:
    """
    2 連結判定

    K2 は 2 連結、K1 と空グラフは 2 連結でない。
    """
    if g.n <= 2:
        return g.n == 2 and g.num_edges == 1
    return nx.is_biconnected(g.to_networkx())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return nx.is_connected(g.to_networkx())


def remove_leafblock_interiors(g: Graph, reports: List[LeafblockReport]) -> SubgraphView:
    """
    リーフブロックの内部（切断点以外の頂点）を削除

    パラメータ:
        g (Graph): 連結かつ 2 連結でないグラフ
        reports (List[LeafblockReport]): g のリーフブロック

    戻り値:
        SubgraphView: G - X（X はリーフブロック内部の和集合）。連結になる。

    例外:
        ValueError: g が前提を満たさない、または reports が g のリーフブロックでない場合
    """
    if not is_connected(g) or is_two_connected(g):
        raise ValueError("g は連結かつ 2 連結でないグラフである必要があります")

    actual = {(r.cutvertex, r.vertices) for r in leafblocks(blocks(g))}
    removed = set()
    for report in reports:
        if (report.cutvertex, report.vertices) not in actual:
            raise ValueError(f"ブロック {report.block_id} は g のリーフブロックではありません")
        removed |= report.interior()

    return induced_subgraph(g, set(g.vertices()) - removed)


def leafblock_component_check(g: Graph, report: LeafblockReport) -> bool:
    """B - u が G - u の連結成分の 1 つと一致するか"""
    nx_graph = g.to_networkx()
    nx_graph.remove_node(report.cutvertex)
    interior = set(report.interior())
    for component in nx.connected_components(nx_graph):
        if component & interior:
            return component == interior
    return False
