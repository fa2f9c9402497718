"""
閉路・弦・局所 2 連結性

主経路はブロック分解（共有ブロックの頂点数 ≥ 3）で判定し、
フローによる判定（networkx.node_disjoint_paths）はテスト用のオラクルとして残す。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from src.models import Graph, induced_subgraph
from src.models.graph import EdgePair, canonical_edge
from src.structure.blocks import (
    BlockDecomposition, blocks, is_two_connected, leafblocks
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommonCycleAnswer:
    """
    in_common_cycle の結果

    holds が False で a, b が非隣接のとき、separator か disconnected が入る。
    """

    holds: bool
    separator: Optional[int] = None
    disconnected: bool = False

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {'holds': self.holds, 'separator': self.separator, 'disconnected': self.disconnected}


@dataclass
class ChordWitness:
    """弦 ab と、G - ab で a, b を通る閉路"""

    chord: EdgePair
    cycle: List[int]

    def verify(self, g: Graph) -> bool:
        """閉路が G - ab の単純閉路で、弦の両端を含むか"""
        a, b = self.chord
        if not g.has_edge(a, b) or len(self.cycle) < 3 or len(set(self.cycle)) != len(self.cycle):
            return False
        if a not in self.cycle or b not in self.cycle:
            return False
        for x, y in zip(self.cycle, self.cycle[1:] + self.cycle[:1]):
            if not g.has_edge(x, y) or canonical_edge(x, y) == self.chord:
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {'chord': list(self.chord), 'cycle': list(self.cycle)}


@dataclass
class ChordlessReport:
    chordless: bool
    witness: Optional[ChordWitness] = None

    def __bool__(self) -> bool:
        return self.chordless

    def to_dict(self) -> Dict[str, Any]:
        return {'chordless': self.chordless, 'witness': self.witness.to_dict() if self.witness else None}


@dataclass
class MengerPathPair:
    """x から y、x から z への道で、共有頂点が x のみのもの"""

    p1: List[int]
    p2: List[int]
    x: int

    def verify(self, g: Graph, y: int, z: int) -> bool:
        for path, end in ((self.p1, y), (self.p2, z)):
            if not path or path[0] != self.x or path[-1] != end:
                return False
            if len(set(path)) != len(path):
                return False
            if any(not g.has_edge(u, v) for u, v in zip(path, path[1:])):
                return False
        return set(self.p1) & set(self.p2) == {self.x}

    def to_dict(self) -> Dict[str, Any]:
        return {'x': self.x, 'p1': list(self.p1), 'p2': list(self.p2)}


def in_common_cycle(
    g: Graph,
    a: int,
    b: int,
    decomposition: Optional[BlockDecomposition] = None
) -> CommonCycleAnswer:
    """
    a と b を両方含む閉路が存在するか

    a, b が頂点数 3 以上の同じブロックに含まれるときに限り True。
    False かつ ab ∉ E(G) の場合は、a と b を分離する頂点 x（または非連結であること）を返す。

    例外:
        ValueError: a == b の場合
    """
    if a == b:
        raise ValueError(f"a と b は異なる頂点を指定してください（{a}）")
    g.check_vertex(a)
    g.check_vertex(b)

    d = decomposition if decomposition is not None else blocks(g)
    if d.shared_block(a, b, min_size=3) is not None:
        return CommonCycleAnswer(holds=True)

    if g.has_edge(a, b):
        return CommonCycleAnswer(holds=False)

    nx_graph = g.to_networkx()
    if not nx.has_path(nx_graph, a, b):
        return CommonCycleAnswer(holds=False, disconnected=True)

    for x in sorted(d.cutvertices - {a, b}):
        view = nx.restricted_view(nx_graph, [x], [])
        if not nx.has_path(view, a, b):
            return CommonCycleAnswer(holds=False, separator=x)

    raise RuntimeError(f"分離頂点が見つかりません（a={a}, b={b}）")


def in_common_cycle_by_flow(g: Graph, a: int, b: int) -> bool:
    """
    フローによる独立判定（テスト用オラクル）

    ab ∈ E なら G - ab に a-b 道があるか、そうでなければ内素な a-b 道が 2 本あるか。
    """
    if a == b:
        raise ValueError(f"a と b は異なる頂点を指定してください（{a}）")
    nx_graph = g.to_networkx()
    if g.has_edge(a, b):
        nx_graph.remove_edge(a, b)
        return nx.has_path(nx_graph, a, b)
    if not nx.has_path(nx_graph, a, b):
        return False
    paths = list(nx.node_disjoint_paths(nx_graph, a, b))
    return len(paths) >= 2


def is_chord_edge(g: Graph, e: Tuple[int, int]) -> bool:
    """
    e = ab が閉路の弦か（G - e に a, b を通る閉路があるか）

    例外:
        ValueError: e ∉ E(G) の場合
    """
    a, b = canonical_edge(*e)
    if not g.has_edge(a, b):
        raise ValueError(f"辺 {(a, b)} はグラフに存在しません")
    return in_common_cycle(g.without_edge((a, b)), a, b).holds


def chord_cycle(g: Graph, e: Tuple[int, int]) -> List[int]:
    """弦 e = ab について G - ab で a, b を通る閉路を返す（a から始まる頂点列）"""
    a, b = canonical_edge(*e)
    nx_graph = g.without_edge((a, b)).to_networkx()
    paths = sorted(nx.node_disjoint_paths(nx_graph, a, b), key=lambda p: (len(p), p))
    if len(paths) < 2:
        raise ValueError(f"辺 {(a, b)} は弦ではありません")
    first, second = paths[0], paths[1]
    return list(first) + list(reversed(second))[1:-1]


def is_chordless(g: Graph) -> ChordlessReport:
    """
    chordless 判定（弦の証拠付き）

    G - e で e の両端を通る閉路は e を含む G のブロックの中にあるので、
    頂点数 4 以上のブロックごとに判定する。
    """
    d = blocks(g)
    for block in d.blocks:
        if block.size < 4:
            continue
        sub = induced_subgraph(g, block.vertices)
        for u, v in sorted(block.edges):
            lu, lv = sub.to_local(u), sub.to_local(v)
            if is_chord_edge(sub.graph, (lu, lv)):
                local_cycle = chord_cycle(sub.graph, (lu, lv))
                witness = ChordWitness(chord=(u, v), cycle=[sub.to_original(x) for x in local_cycle])
                logger.debug("弦を検出: %s", witness)
                return ChordlessReport(chordless=False, witness=witness)
    return ChordlessReport(chordless=True)


def is_minimally_2connected(g: Graph) -> bool:
    """2 連結かつ chordless（= 極小 2 連結）"""
    return is_two_connected(g) and is_chordless(g).chordless


def menger_pair(g: Graph, x: int, y: int, z: int) -> MengerPathPair:
    """
    2 連結グラフで x→y, x→z の道 P1, P2（V(P1) ∩ V(P2) = {x}）を構成

    y = x または z = x の場合、その道は {x} のみ。

    例外:
        ValueError: g が 2 連結でない、または y == z の場合
    """
    for v in (x, y, z):
        g.check_vertex(v)
    if y == z:
        raise ValueError(f"y と z は異なる頂点を指定してください（{y}）")
    if not is_two_connected(g):
        raise ValueError("g は 2 連結である必要があります")

    nx_graph = g.to_networkx()
    if y == x:
        return MengerPathPair(p1=[x], p2=nx.shortest_path(nx_graph, x, z), x=x)
    if z == x:
        return MengerPathPair(p1=nx.shortest_path(nx_graph, x, y), p2=[x], x=x)

    # N(x) から {y, z} への内素な 2 本の道を G - x で求める
    source, sink = ('source',), ('sink',)
    aux = nx_graph.copy()
    aux.remove_node(x)
    aux.add_edges_from((source, w) for w in g.neighbors(x))
    aux.add_edges_from([(y, sink), (z, sink)])

    found: Dict[int, List[int]] = {}
    for path in nx.node_disjoint_paths(aux, source, sink):
        inner = list(path[1:-1])
        start = max(i for i, w in enumerate(inner) if g.has_edge(x, w))
        found[inner[-1]] = [x] + inner[start:]
    if y not in found or z not in found:
        raise RuntimeError(f"内素な道が見つかりません（x={x}, y={y}, z={z}）")
    return MengerPathPair(p1=found[y], p2=found[z], x=x)


@dataclass
class EdgeRemovalReport:
    """
    2 連結 G で G - e が 2 連結でないときの構造検査

    各フィールドが True なら対応する性質が成り立つ。
    """

    edge: EdgePair
    endpoints_not_cutvertices: bool
    endpoints_share_no_cycle: bool
    leafblock_count: int
    endpoints_in_distinct_leafblocks: bool
    cutvertex_splits_in_two: bool
    single_edge: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        base = self.endpoints_not_cutvertices and self.endpoints_share_no_cycle and self.cutvertex_splits_in_two
        if self.single_edge:
            return base
        return base and self.leafblock_count == 2 and self.endpoints_in_distinct_leafblocks

    def to_dict(self) -> Dict[str, Any]:
        return {
            'edge': list(self.edge),
            'endpoints_not_cutvertices': self.endpoints_not_cutvertices,
            'endpoints_share_no_cycle': self.endpoints_share_no_cycle,
            'leafblock_count': self.leafblock_count,
            'endpoints_in_distinct_leafblocks': self.endpoints_in_distinct_leafblocks,
            'cutvertex_splits_in_two': self.cutvertex_splits_in_two,
            'single_edge': self.single_edge,
            'holds': self.holds
        }


def edge_removal_report(g: Graph, e: Tuple[int, int]) -> EdgeRemovalReport:
    """
    2 連結な g と、g - e が 2 連結でない辺 e について構造的性質を検査

    例外:
        ValueError: 前提（g が 2 連結、g - e が 2 連結でない）を満たさない場合
    """
    a, b = canonical_edge(*e)
    if not is_two_connected(g):
        raise ValueError("g は 2 連結である必要があります")
    h = g.without_edge((a, b))
    if is_two_connected(h):
        raise ValueError(f"g - {(a, b)} が 2 連結なので前提を満たしません")

    d = blocks(h)
    single_edge = g.num_edges == 1
    endpoints_not_cut = a not in d.cutvertices and b not in d.cutvertices
    no_cycle = not in_common_cycle(h, a, b, decomposition=d).holds

    leaves = leafblocks(d)
    distinct = False
    if len(leaves) == 2:
        first, second = leaves[0].interior(), leaves[1].interior()
        distinct = (a in first and b in second) or (b in first and a in second)

    splits = True
    nx_h = h.to_networkx()
    for u in sorted(d.cutvertices):
        view = nx.restricted_view(nx_h, [u], [])
        components = list(nx.connected_components(view))
        if len(components) != 2 or not any(a in c and b not in c for c in components):
            splits = False
            break

    return EdgeRemovalReport(
        edge=(a, b),
        endpoints_not_cutvertices=endpoints_not_cut,
        endpoints_share_no_cycle=no_cycle,
        leafblock_count=len(leaves),
        endpoints_in_distinct_leafblocks=distinct,
        cutvertex_splits_in_two=splits,
        single_edge=single_edge
    )
