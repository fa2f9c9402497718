"""
strong 辺彩色パイプライン

h(e) = (f(e), g_{f(e)}(v_e)):
    f     : proper 辺彩色（Δ 色、だめなら Δ+1 色）
    g_i   : 色クラス E_i の縮約グラフ G_{E_i} の 2-縮退による 3 彩色
色は 3(i-1)+j に平坦化する。Δ ≤ 2 のときは道と閉路の専用彩色（5 色以下）を使う。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import networkx as nx

from src.coloring.degeneracy import DegeneracyFailure, degeneracy_ordering, greedy_color
from src.coloring.edge_coloring import chromatic_index_coloring
from src.contraction import contract, matchings_from_edge_coloring
from src.models import Graph, StrongEdgeColoring, flatten_pair, induced_subgraph
from src.models.errors import EdgeColoringError, NotChordlessError
from src.models.graph import EdgePair, canonical_edge
from src.structure import is_chordless

logger = logging.getLogger(__name__)

SHARED_ENDPOINT = 'shared-endpoint'
LINKED = 'linked'

PATHS_CYCLES = 'paths-cycles'


# =====================================
# 【衝突グラフと検証】
# =====================================

@dataclass(frozen=True)
class ConflictGraph:
    """
    ホストの辺を頂点とする衝突グラフ

    頂点 i はホストの辺 edges[i]（正規順）。端点を共有するか、
    端点どうしを結ぶ辺がある 2 辺を隣接させる。
    """

    graph: Graph
    edges: Tuple[EdgePair, ...]

    index: Dict[EdgePair, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'index', {e: i for i, e in enumerate(self.edges)})

    def vertex_of(self, edge: Tuple[int, int]) -> int:
        return self.index[canonical_edge(*edge)]

    def is_complete(self) -> bool:
        k = self.graph.n
        return self.graph.num_edges == k * (k - 1) // 2


def _conflict_reason(g: Graph, e: EdgePair, f: EdgePair) -> Optional[Tuple[str, Optional[EdgePair]]]:
    """2 辺が同色にできない理由（できるなら None）"""
    if set(e) & set(f):
        return SHARED_ENDPOINT, None
    for x in e:
        for y in f:
            if g.has_edge(x, y):
                return LINKED, canonical_edge(x, y)
    return None


def conflict_graph(g: Graph) -> ConflictGraph:
    """
    衝突グラフを構築

    strong 辺彩色は衝突グラフの proper 頂点彩色とちょうど対応する。
    """
    edges = tuple(g.sorted_edges())
    index = {e: i for i, e in enumerate(edges)}
    conflicts = set()
    for e in edges:
        i = index[e]
        # e の端点から距離 1 以内の頂点に接する辺がすべて衝突相手
        reach = set(e)
        for x in e:
            reach.update(g.neighbors(x))
        for y in reach:
            for z in g.neighbors(y):
                j = index[canonical_edge(y, z)]
                if j != i:
                    conflicts.add(canonical_edge(i, j))
    return ConflictGraph(graph=Graph(n=len(edges), edges=frozenset(conflicts)), edges=edges)


@dataclass
class Valid:
    colors_used: int

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {'valid': True, 'colors_used': self.colors_used}


@dataclass
class Violation:
    """同色の 2 辺と、その理由（端点共有 / 結ぶ辺がある）"""

    first: EdgePair
    second: EdgePair
    reason: str
    color: int
    link: Optional[EdgePair] = None

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'valid': False,
            'edges': [list(self.first), list(self.second)],
            'reason': self.reason,
            'color': self.color,
            'link': list(self.link) if self.link else None
        }


def _check_edge_set(g: Graph, c: StrongEdgeColoring) -> None:
    c.ensure_covers(g)
    extra = sorted(set(c.colors) - g.edges)
    if extra:
        raise EdgeColoringError(f"グラフに存在しない辺に色があります: {extra[:5]}")


def verify_strong(g: Graph, c: StrongEdgeColoring) -> Union[Valid, Violation]:
    """
    各色クラスが誘導マッチングか検証

    戻り値:
        Valid | Violation: 違反は辞書順で最初のもの

    例外:
        ColoringCoverageError: 色のない辺がある場合
        EdgeColoringError: グラフにない辺に色がある場合
    """
    _check_edge_set(g, c)

    for color, members in sorted(c.color_classes().items()):
        endpoints: Dict[int, EdgePair] = {}
        for e in members:
            for x in e:
                if x in endpoints:
                    return Violation(first=endpoints[x], second=e, reason=SHARED_ENDPOINT, color=color)
                endpoints[x] = e
        for e in members:
            for x in e:
                for y in g.neighbors(x):
                    other = endpoints.get(y)
                    if other is not None and other != e:
                        first, second = sorted((e, other))
                        return Violation(
                            first=first, second=second, reason=LINKED, color=color,
                            link=canonical_edge(x, y)
                        )
    return Valid(colors_used=c.colors_used)


def is_proper_on_conflict_graph(g: Graph, c: StrongEdgeColoring, cg: Optional[ConflictGraph] = None) -> bool:
    """衝突グラフ上の proper 頂点彩色として検証（verify_strong とは別経路）"""
    _check_edge_set(g, c)
    cg = cg if cg is not None else conflict_graph(g)
    return all(c.colors[cg.edges[i]] != c.colors[cg.edges[j]] for i, j in cg.graph.edges)


# =====================================
# 【Δ ≤ 2: 道と閉路】
# =====================================

def cycle_pattern(n: int) -> List[int]:
    """
    C_n の辺 e_0..e_{n-1}（周回順）の色

    3 | n なら 1,2,3 の繰り返し、C5 は 5 色、それ以外は 4 色。
    """
    if n < 3:
        raise ValueError(f"閉路の長さは 3 以上です（現在値: {n}）")
    if n % 3 == 0:
        return [1, 2, 3] * (n // 3)
    if n == 5:
        return [1, 2, 3, 4, 5]
    if n % 3 == 1:
        return [1, 2, 3] * ((n - 4) // 3) + [1, 2, 3, 4]
    return [1, 2, 3] * ((n - 8) // 3) + [1, 2, 3, 4] * 2


def _walk_component(g: Graph, vertices: List[int]) -> Tuple[List[int], bool]:
    """Δ ≤ 2 の連結成分を端点（閉路なら最小 ID）から辿る"""
    ends = [v for v in vertices if g.degree(v) <= 1]
    start = ends[0] if ends else vertices[0]
    walk = [start]
    prev = None
    while True:
        nxt = [w for w in g.neighbors(walk[-1]) if w != prev and w != walk[0]]
        if not nxt:
            break
        prev = walk[-1]
        walk.append(nxt[0])
    return walk, not ends


def strong_color_paths_cycles(g: Graph) -> StrongEdgeColoring:
    """
    Δ ≤ 2 のグラフ（道と閉路の非交和）を 5 色以下で strong 辺彩色

    例外:
        ValueError: Δ > 2 の場合
    """
    if g.max_degree() > 2:
        raise ValueError(f"Δ ≤ 2 のグラフが必要です（Δ={g.max_degree()}）")

    colors: Dict[EdgePair, int] = {}
    components = sorted((sorted(c) for c in nx.connected_components(g.to_networkx())), key=lambda c: c[0])
    for component in components:
        if len(component) < 2:
            continue
        walk, is_cycle = _walk_component(g, component)
        if is_cycle:
            pattern = cycle_pattern(len(walk))
            steps = list(zip(walk, walk[1:] + walk[:1]))
        else:
            steps = list(zip(walk, walk[1:]))
            pattern = [1, 2, 3] * (len(steps) // 3 + 1)
        for (x, y), col in zip(steps, pattern):
            colors[canonical_edge(x, y)] = col

    result = StrongEdgeColoring(colors=colors)
    verdict = verify_strong(g, result)
    if not verdict:
        raise RuntimeError(f"道・閉路の彩色が不正です: {verdict.to_dict()}")
    return result


# =====================================
# 【パイプライン】
# =====================================

def strong_color_bound(delta: int) -> int:
    """
    chordless グラフの strong 辺彩色で保証する色数（Δ ≥ 3 は 3Δ、Δ = 2 は 5、Δ ≤ 1 は Δ）
    """
    if delta >= 3:
        return 3 * delta
    return 5 if delta == 2 else delta


@dataclass
class ClassStats:
    """色クラス E_i ごとの縮約グラフの統計"""

    component: int
    color: int
    matching_size: int
    quotient_vertices: int
    quotient_edges: int
    red_edges: int
    blue_edges: int
    colors_used: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'component': self.component,
            'color': self.color,
            'matching_size': self.matching_size,
            'quotient_vertices': self.quotient_vertices,
            'quotient_edges': self.quotient_edges,
            'red_edges': self.red_edges,
            'blue_edges': self.blue_edges,
            'colors_used': self.colors_used
        }


@dataclass
class StrongColoringReport:
    """
    パイプラインの結果

    edge_coloring_path は f を得た経路（"exact" / "vizing" / "vizing-fallback"）、
    Δ ≤ 2 の場合は "paths-cycles"。
    """

    coloring: StrongEdgeColoring
    delta: int
    bound_claimed: int
    edge_coloring_path: str
    edge_colors: int = 0
    classes: List[ClassStats] = field(default_factory=list)

    @property
    def colors_used(self) -> int:
        return self.coloring.colors_used

    @property
    def within_3delta(self) -> bool:
        if self.delta <= 2:
            return self.colors_used <= 5
        return self.colors_used <= 3 * self.delta

    def to_dict(self) -> Dict[str, Any]:
        data = self.coloring.to_dict()
        data.update({
            'delta': self.delta,
            'bound_claimed': self.bound_claimed,
            'edge_coloring_path': self.edge_coloring_path,
            'edge_colors': self.edge_colors,
            'classes': [s.to_dict() for s in self.classes]
        })
        return data


_PATH_RANK = {'exact': 0, 'vizing': 1, 'vizing-fallback': 2}


def _color_component(
    sub: Graph,
    component_index: int,
    delta: int,
    budget: Optional[int]
) -> Tuple[Dict[EdgePair, Tuple[int, int]], str, int, List[ClassStats]]:
    """1 つの連結成分を補題の方法で彩色（ローカル ID の辺 → (i, j)）"""
    f = chromatic_index_coloring(sub, budget=budget, k=delta)
    pairs: Dict[EdgePair, Tuple[int, int]] = {}
    stats: List[ClassStats] = []

    for matching in matchings_from_edge_coloring(sub, f):
        i = f.colors[matching.sorted_edges()[0]]
        cg = contract(sub, matching)
        ordering = degeneracy_ordering(cg.quotient, 2)
        if isinstance(ordering, DegeneracyFailure):
            raise RuntimeError(
                f"縮約グラフが 2-縮退ではありません（色 {i}, コア {sorted(ordering.core)}）"
            )
        vertex_colors = greedy_color(cg.quotient, ordering)
        for v, e in enumerate(cg.provenance):
            pairs[e] = (i, vertex_colors.colors[v] + 1)

        red = len(cg.red_edges())
        stats.append(ClassStats(
            component=component_index,
            color=i,
            matching_size=len(matching),
            quotient_vertices=cg.quotient.n,
            quotient_edges=cg.quotient.num_edges,
            red_edges=red,
            blue_edges=cg.quotient.num_edges - red,
            colors_used=vertex_colors.colors_used
        ))
    return pairs, f.method, f.num_colors, stats


def strong_color_chordless(g: Graph, budget: Optional[int] = None) -> StrongColoringReport:
    """
    chordless グラフを 3Δ 色以下で strong 辺彩色

    パラメータ:
        g (Graph): chordless なグラフ（辺 1 本以上）
        budget (int, optional): 厳密辺彩色の探索ノード予算

    戻り値:
        StrongColoringReport: 彩色と経路・統計

    例外:
        NotChordlessError: 弦がある場合（証拠付き）
        ValueError: 辺がない場合
    """
    if g.num_edges == 0:
        raise ValueError("辺のないグラフは彩色できません")
    recognition = is_chordless(g)
    if not recognition.chordless:
        raise NotChordlessError(recognition.witness)

    delta = g.max_degree()
    if delta <= 2:
        coloring = strong_color_paths_cycles(g)
        logger.info("✅ Δ=%d: 道・閉路の彩色で %d 色", delta, coloring.colors_used)
        return StrongColoringReport(
            coloring=coloring, delta=delta, bound_claimed=strong_color_bound(delta), edge_coloring_path=PATHS_CYCLES
        )

    pairs: Dict[EdgePair, Tuple[int, int]] = {}
    path = 'exact'
    edge_colors = 0
    stats: List[ClassStats] = []
    components = sorted((sorted(c) for c in nx.connected_components(g.to_networkx())), key=lambda c: c[0])
    for index, component in enumerate(c for c in components if len(c) > 1):
        view = induced_subgraph(g, component)
        local_pairs, method, used, local_stats = _color_component(view.graph, index, delta, budget)
        for (u, v), pair in local_pairs.items():
            pairs[canonical_edge(view.to_original(u), view.to_original(v))] = pair
        if _PATH_RANK[method] > _PATH_RANK[path]:
            path = method
        edge_colors = max(edge_colors, used)
        stats.extend(local_stats)

    coloring = StrongEdgeColoring(
        colors={e: flatten_pair(i, j) for e, (i, j) in pairs.items()},
        pairs=pairs
    )
    verdict = verify_strong(g, coloring)
    if not verdict:
        raise RuntimeError(f"パイプラインの出力が strong 辺彩色になっていません: {verdict.to_dict()}")

    logger.info(
        "✅ Δ=%d: %d 色（上限 %d、辺彩色 %s）", delta, coloring.colors_used, 3 * edge_colors, path
    )
    return StrongColoringReport(
        coloring=coloring,
        delta=delta,
        bound_claimed=3 * edge_colors,
        edge_coloring_path=path,
        edge_colors=edge_colors,
        classes=stats
    )
