"""
proper 辺彩色 f

k = Δ での厳密探索（バックトラック）と、Δ+1 色の Vizing 彩色（Misra–Gries の扇と交互道）。
"""

import logging
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from src.models import Graph, ProperEdgeColoring
from src.models.graph import EdgePair, canonical_edge

logger = logging.getLogger(__name__)

DEFAULT_BUDGET_NODES = 10 ** 7


def default_budget_nodes() -> int:
    """探索ノード予算の既定値（環境変数 STRONG_COLOR_BUDGET_NODES で上書き可）"""
    raw = os.getenv('STRONG_COLOR_BUDGET_NODES')
    if not raw:
        return DEFAULT_BUDGET_NODES
    try:
        value = int(raw)
    except ValueError:
        logger.warning("⚠️ STRONG_COLOR_BUDGET_NODES が整数ではありません: '%s'（既定値を使用）", raw)
        return DEFAULT_BUDGET_NODES
    if value <= 0:
        logger.warning("⚠️ STRONG_COLOR_BUDGET_NODES は正の整数で指定してください（既定値を使用）")
        return DEFAULT_BUDGET_NODES
    return value


@dataclass
class Infeasible:
    """k 色の proper 辺彩色が存在しない（探索を尽くした）"""

    k: int
    nodes: int


@dataclass
class BudgetExceeded:
    """探索ノード予算を使い切った"""

    k: int
    nodes: int
    budget: int


class _ExactSearch:
    """最も制約の強い辺から色を決めるバックトラック探索"""

    def __init__(self, g: Graph, k: int, budget: int):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.colors: Dict[EdgePair, int] = {}
        self.used = [0] * g.n
        self.edges = g.sorted_edges()

    def assign(self, e: EdgePair, c: int) -> None:
        self.colors[e] = c
        self.used[e[0]] |= 1 << c
        self.used[e[1]] |= 1 << c

    def unassign(self, e: EdgePair) -> None:
        c = self.colors.pop(e)
        self.used[e[0]] &= ~(1 << c)
        self.used[e[1]] &= ~(1 << c)

    def candidates(self, e: EdgePair) -> List[int]:
        blocked = self.used[e[0]] | self.used[e[1]]
        return [c for c in range(1, self.k + 1) if not (blocked >> c) & 1]

    def select(self) -> Optional[Tuple[EdgePair, List[int]]]:
        """未彩色の辺のうち候補が最少のもの（同数なら辞書順で最初）"""
        best = None
        for e in self.edges:
            if e in self.colors:
                continue
            options = self.candidates(e)
            if best is None or len(options) < len(best[1]):
                best = (e, options)
                if not options:
                    break
        return best

    def fix_hub(self) -> None:
        """最大次数の頂点（ID 最小）の辺に色 1..deg を固定"""
        hub = max(self.g.vertices(), key=lambda v: (self.g.degree(v), -v))
        for c, w in enumerate(self.g.neighbors(hub), 1):
            self.assign(canonical_edge(hub, w), c)

    def run(self) -> Union[ProperEdgeColoring, Infeasible, BudgetExceeded]:
        if self.g.num_edges == 0:
            return ProperEdgeColoring(colors={}, num_colors=self.k, method="exact")
        if self.g.max_degree() > self.k:
            return Infeasible(k=self.k, nodes=0)

        self.fix_hub()
        stack: List[list] = []
        while True:
            selected = self.select()
            if selected is None:
                return ProperEdgeColoring(colors=dict(self.colors), num_colors=self.k, method="exact")
            stack.append([selected[0], selected[1], 0])

            while stack:
                frame = stack[-1]
                e, options, i = frame
                if e in self.colors:
                    self.unassign(e)
                if i < len(options):
                    frame[2] += 1
                    self.nodes += 1
                    if self.nodes > self.budget:
                        return BudgetExceeded(k=self.k, nodes=self.nodes, budget=self.budget)
                    self.assign(e, options[i])
                    break
                stack.pop()
            else:
                return Infeasible(k=self.k, nodes=self.nodes)


def edge_color_exact(
    g: Graph,
    k: int,
    budget: Optional[int] = None
) -> Union[ProperEdgeColoring, Infeasible, BudgetExceeded]:
    """
    k 色の proper 辺彩色を厳密探索

    パラメータ:
        g (Graph): 対象グラフ
        k (int): 色数（1 以上）
        budget (int, optional): 探索ノード予算（省略時は既定値）

    戻り値:
        ProperEdgeColoring | Infeasible | BudgetExceeded

    例外:
        ValueError: k < 1 の場合
    """
    if k < 1:
        raise ValueError(f"k は 1 以上で指定してください（現在値: {k}）")
    budget = budget if budget is not None else default_budget_nodes()
    result = _ExactSearch(g, k, budget).run()
    logger.debug("厳密辺彩色 k=%d: %s", k, type(result).__name__)
    return result


class _VizingColorer:
    """Misra–Gries 法による Δ+1 色の辺彩色"""

    def __init__(self, g: Graph):
        self.g = g
        self.palette = g.max_degree() + 1
        self.color: Dict[EdgePair, int] = {}
        self.at: List[Dict[int, int]] = [{} for _ in range(g.n)]

    def set_color(self, u: int, v: int, c: int) -> None:
        self.color[canonical_edge(u, v)] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def clear_color(self, u: int, v: int) -> int:
        c = self.color.pop(canonical_edge(u, v))
        del self.at[u][c]
        del self.at[v][c]
        return c

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def free_color(self, v: int) -> int:
        for c in range(1, self.palette + 1):
            if c not in self.at[v]:
                return c
        raise RuntimeError(f"頂点 {v} に空き色がありません")

    def maximal_fan(self, u: int, v: int) -> List[int]:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in range(1, self.palette + 1):
                w = self.at[u].get(c)
                if w is not None and w not in in_fan and self.is_free(last, c):
                    nxt = w
                    break
            if nxt is None:
                return fan
            fan.append(nxt)
            in_fan.add(nxt)

    def invert_path(self, u: int, c: int, d: int) -> None:
        """u から始まる d/c 交互道の色を入れ替える（c は u で空き）"""
        path: List[Tuple[int, int, int]] = []
        x, expected = u, d
        while expected in self.at[x]:
            y = self.at[x][expected]
            path.append((x, y, expected))
            x = y
            expected = c if expected == d else d
        for x, y, _ in path:
            self.clear_color(x, y)
        for x, y, col in path:
            self.set_color(x, y, c if col == d else d)

    def color_edge(self, u: int, v: int) -> None:
        fan = self.maximal_fan(u, v)
        c = self.free_color(u)
        d = self.free_color(fan[-1])
        if c != d:
            self.invert_path(u, c, d)

        end = 0
        for i, w in enumerate(fan):
            end = i
            if self.is_free(w, d):
                break
            if i + 1 < len(fan) and not self.is_free(w, self.color[canonical_edge(u, fan[i + 1])]):
                raise RuntimeError(f"扇が崩れました（u={u}, i={i}）")
        if not self.is_free(fan[end], d):
            raise RuntimeError(f"色 {d} が空いている扇の頂点がありません（u={u}）")

        shifted = [self.color[canonical_edge(u, fan[i + 1])] for i in range(end)]
        for i in range(1, end + 1):
            self.clear_color(u, fan[i])
        for i, col in enumerate(shifted):
            self.set_color(u, fan[i], col)
        self.set_color(u, fan[end], d)

    def run(self) -> ProperEdgeColoring:
        for u, v in self.g.sorted_edges():
            self.color_edge(u, v)
        return ProperEdgeColoring(
            colors=dict(self.color),
            num_colors=max(self.color.values(), default=0),
            method="vizing"
        )


def edge_color_vizing(g: Graph) -> ProperEdgeColoring:
    """
    Δ+1 色以下の proper 辺彩色（扇の回転と交互道の反転）

    パラメータ:
        g (Graph): 対象グラフ

    戻り値:
        ProperEdgeColoring: num_colors は実際に使った最大の色
    """
    return _VizingColorer(g).run()


def chromatic_index_coloring(
    g: Graph,
    budget: Optional[int] = None,
    k: Optional[int] = None
) -> ProperEdgeColoring:
    """
    k = Δ の厳密探索を試し、だめなら Vizing で Δ+1 色

    パラメータ:
        g (Graph): 対象グラフ
        budget (int, optional): 探索ノード予算
        k (int, optional): 厳密探索の色数（省略時は Δ(g)。連結成分を親グラフの Δ で塗るときに指定）

    method:
        "exact"           : k 色で成功
        "vizing"          : k 色では解なし
        "vizing-fallback" : 予算超過のため Vizing に切り替え
    """
    delta = g.max_degree()
    if delta == 0:
        return ProperEdgeColoring(colors={}, num_colors=0, method="exact")

    target = max(k, delta) if k is not None else delta
    result = edge_color_exact(g, target, budget)
    if isinstance(result, ProperEdgeColoring):
        return result

    fallback = edge_color_vizing(g)
    if isinstance(result, BudgetExceeded):
        logger.warning("⚠️ 厳密辺彩色が予算（%d ノード）を超えたため Vizing に切り替えます", result.budget)
        fallback.method = "vizing-fallback"
    else:
        logger.info("%d 色の辺彩色は存在しません。Vizing で %d 色", target, fallback.num_colors)
        fallback.method = "vizing"
    return fallback
