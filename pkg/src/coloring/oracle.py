"""
χ'_s の厳密オラクル

衝突グラフの彩色数を分枝限定法（DSATUR）で求める。
下界は最大クリーク、上界は貪欲 DSATUR。予算や辺数上限に達した場合は
上下界だけを返し、誤った値を返すことはない。
"""

import logging
import os
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Set

import networkx as nx

from src.coloring.strong_coloring import ConflictGraph, conflict_graph
from src.data_sources.generators import tightness_graph
from src.models import Graph, StrongEdgeColoring

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 30
DEFAULT_ORACLE_BUDGET = 10 ** 7

OPTIMAL = 'optimal'
BUDGET_EXCEEDED = 'budget-exceeded'
EDGE_CAP_EXCEEDED = 'edge-cap-exceeded'


def default_oracle_cap() -> int:
    """オラクルの辺数上限（環境変数 STRONG_COLOR_ORACLE_CAP で上書き可）"""
    raw = os.getenv('STRONG_COLOR_ORACLE_CAP')
    if not raw:
        return DEFAULT_ORACLE_CAP
    try:
        value = int(raw)
    except ValueError:
        logger.warning("⚠️ STRONG_COLOR_ORACLE_CAP が整数ではありません: '%s'（既定値を使用）", raw)
        return DEFAULT_ORACLE_CAP
    return value if value > 0 else DEFAULT_ORACLE_CAP


@dataclass
class OracleResult:
    """
    オラクルの結果

    status が 'optimal' のときだけ value が χ'_s。それ以外は lower ≤ χ'_s ≤ upper。
    """

    status: str
    lower: int
    upper: Optional[int]
    coloring: Optional[StrongEdgeColoring] = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def value(self) -> Optional[int]:
        return self.upper if self.status == OPTIMAL else None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            'status': self.status,
            'value': self.value,
            'lower': self.lower,
            'upper': self.upper,
            'nodes': self.nodes,
            'coloring': self.coloring.to_dict() if self.coloring is not None else None
        }
        if include_timing:
            data['elapsed'] = round(self.elapsed, 6)
        return data


def edge_star_bound(g: Graph) -> int:
    """辺 uv に接する辺はすべて互いに衝突するので d(u)+d(v)-1 が下界"""
    return max((g.degree(u) + g.degree(v) - 1 for u, v in g.edges), default=0)


class _DsaturSearch:
    """衝突グラフの彩色数を求める分枝限定法"""

    def __init__(self, graph: Graph, budget: int):
        self.graph = graph
        self.adj: List[Set[int]] = [set(graph.neighbors(v)) for v in graph.vertices()]
        self.budget = budget
        self.nodes = 0
        self.exhausted = False
        self.best: List[int] = []
        self.best_k = graph.n + 1
        self.lower = 0

    def select(self, colors: List[int]) -> int:
        """飽和度最大、同点なら未彩色の隣接数最大、さらに ID 最小の頂点"""
        best_key = None
        best_v = -1
        for v in self.graph.vertices():
            if colors[v]:
                continue
            saturation = len({colors[w] for w in self.adj[v] if colors[w]})
            uncolored = sum(1 for w in self.adj[v] if not colors[w])
            key = (-saturation, -uncolored, v)
            if best_key is None or key < best_key:
                best_key, best_v = key, v
        return best_v

    def greedy(self, colors: List[int]) -> List[int]:
        """DSATUR 貪欲彩色（上界）"""
        colors = list(colors)
        for _ in range(sum(1 for c in colors if not c)):
            v = self.select(colors)
            taken = {colors[w] for w in self.adj[v]}
            c = 1
            while c in taken:
                c += 1
            colors[v] = c
        return colors

    def search(self, colors: List[int], used: int, remaining: int) -> None:
        if self.exhausted or self.best_k <= self.lower:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        if remaining == 0:
            if used < self.best_k:
                self.best_k = used
                self.best = list(colors)
            return

        v = self.select(colors)
        taken = {colors[w] for w in self.adj[v]}
        for c in range(1, min(used + 1, self.best_k - 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            self.search(colors, max(used, c), remaining - 1)
            colors[v] = 0
            if self.exhausted or self.best_k <= self.lower:
                return

    def run(self, clique: List[int]) -> None:
        start = [0] * self.graph.n
        for c, v in enumerate(clique, 1):
            start[v] = c
        self.lower = len(clique)

        self.best = self.greedy(start)
        self.best_k = max(self.best, default=0)
        if self.best_k > self.lower:
            self.search(start, len(clique), self.graph.n - len(clique))


def _max_clique(cg: ConflictGraph) -> List[int]:
    cliques = (sorted(c) for c in nx.find_cliques(cg.graph.to_networkx()))
    return max(cliques, key=lambda c: (len(c), [-v for v in c]), default=[])


def _to_coloring(cg: ConflictGraph, colors: List[int]) -> StrongEdgeColoring:
    return StrongEdgeColoring(colors={e: colors[i] for i, e in enumerate(cg.edges)})


def exact_chi_s(g: Graph, budget: Optional[int] = None, cap: Optional[int] = None) -> OracleResult:
    """
    χ'_s(g) を厳密に求める

    パラメータ:
        g (Graph): 対象グラフ
        budget (int, optional): 探索ノード予算
        cap (int, optional): 辺数の上限（既定 30）

    戻り値:
        OracleResult: 最適値と最適彩色、または上下界
    """
    budget = budget if budget is not None else DEFAULT_ORACLE_BUDGET
    cap = cap if cap is not None else default_oracle_cap()
    started = time.perf_counter()

    if g.num_edges == 0:
        return OracleResult(status=OPTIMAL, lower=0, upper=0, coloring=StrongEdgeColoring(colors={}))

    if g.num_edges > cap:
        logger.warning("⚠️ 辺数 %d が上限 %d を超えるため上下界のみ返します", g.num_edges, cap)
        cg = conflict_graph(g)
        search = _DsaturSearch(cg.graph, budget)
        colors = search.greedy([0] * cg.graph.n)
        return OracleResult(
            status=EDGE_CAP_EXCEEDED,
            lower=edge_star_bound(g),
            upper=max(colors),
            coloring=_to_coloring(cg, colors),
            elapsed=time.perf_counter() - started
        )

    cg = conflict_graph(g)
    clique = _max_clique(cg)
    search = _DsaturSearch(cg.graph, budget)
    search.run(clique)

    status = BUDGET_EXCEEDED if search.exhausted else OPTIMAL
    if search.exhausted:
        logger.warning("⚠️ オラクルの探索予算（%d ノード）を使い切りました", budget)
    result = OracleResult(
        status=status,
        lower=max(len(clique), edge_star_bound(g)),
        upper=search.best_k,
        coloring=_to_coloring(cg, search.best),
        nodes=search.nodes,
        elapsed=time.perf_counter() - started
    )
    logger.debug("オラクル: %s（%d ノード）", result.status, result.nodes)
    return result


@dataclass
class TightnessReport:
    """tightness(Δ) の衝突グラフが完全グラフであることの検査"""

    delta: int
    edges: int
    expected: int
    conflict_complete: bool
    oracle: Optional[OracleResult] = None

    @property
    def holds(self) -> bool:
        if not self.conflict_complete or self.edges != self.expected:
            return False
        if self.oracle is not None:
            return self.oracle.is_optimal and self.oracle.value == self.expected
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'delta': self.delta,
            'edges': self.edges,
            'expected': self.expected,
            'conflict_complete': self.conflict_complete,
            'oracle': self.oracle.to_dict() if self.oracle is not None else None,
            'holds': self.holds
        }


def tightness_audit(delta: int, budget: Optional[int] = None, oracle_max_delta: int = 4) -> TightnessReport:
    """
    tightness(Δ) の衝突グラフが K_{3Δ-2} であることを確認し、
    Δ ≤ oracle_max_delta ならオラクルでも χ'_s = 3Δ-2 を確認する
    """
    g = tightness_graph(delta)
    cg = conflict_graph(g)
    oracle = exact_chi_s(g, budget=budget, cap=max(g.num_edges, default_oracle_cap())) if delta <= oracle_max_delta else None
    report = TightnessReport(
        delta=delta,
        edges=g.num_edges,
        expected=3 * delta - 2,
        conflict_complete=cg.is_complete(),
        oracle=oracle
    )
    logger.debug("tightness(%d): 衝突グラフ完全=%s", delta, report.conflict_complete)
    return report
