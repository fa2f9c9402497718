"""
テスト用コーパスのグラフ生成器

すべての生成器はシード固定で再現可能。
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from src.models import Graph
from src.models.errors import GeneratorSpecError
from src.models.graph import EdgePair, canonical_edge

logger = logging.getLogger(__name__)

FAMILIES = (
    'path', 'cycle', 'star', 'tightness', 'full-subdivision', 'random-tree',
    'complete', 'wheel', 'random-subdivision', 'tree-ears'
)


@dataclass
class GeneratorSpec:
    """
    生成器の指定

    【使用例】
    GeneratorSpec(family="tightness", delta=5)
    GeneratorSpec(family="random-tree", n=12, seed=7)
    """

    family: str
    n: Optional[int] = None           # 頂点数（path / cycle / random-tree / complete / wheel / random-subdivision / tree-ears）
    delta: Optional[int] = None       # 次数（tightness / star）
    base: Optional[Graph] = None      # 元グラフ（full-subdivision）
    seed: int = 0                     # 乱数シード（64bit 整数）
    m: Optional[int] = None           # 元グラフの辺数（random-subdivision）
    ears: int = 3                     # 追加する耳の数（tree-ears）

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GeneratorSpecError(f"未知の family です: '{self.family}'（{', '.join(FAMILIES)}）")

        if not (0 <= self.seed < 2 ** 64):
            raise GeneratorSpecError(f"seed は 64bit の非負整数で指定してください（現在値: {self.seed}）")

        if self.family == 'tightness':
            if self.delta is None or self.delta < 2:
                raise GeneratorSpecError(f"tightness には Δ ≥ 2 が必要です（現在値: {self.delta}）")
        elif self.family == 'star':
            if self.delta is None and self.n is None:
                raise GeneratorSpecError("star には delta（葉の数）が必要です")
            leaves = self.delta if self.delta is not None else self.n
            if leaves < 1:
                raise GeneratorSpecError(f"star の葉の数は 1 以上です（現在値: {leaves}）")
        elif self.family == 'full-subdivision':
            if self.base is None:
                raise GeneratorSpecError("full-subdivision には base グラフが必要です（例: base=complete:4）")
        else:
            minimum = {'cycle': 3, 'wheel': 4}.get(self.family, 1)
            if self.n is None or self.n < minimum:
                raise GeneratorSpecError(f"{self.family} には n ≥ {minimum} が必要です（現在値: {self.n}）")
            if self.family == 'random-subdivision' and self.m is not None:
                if not (0 <= self.m <= self.n * (self.n - 1) // 2):
                    raise GeneratorSpecError(f"m が範囲外です（現在値: {self.m}）")
            if self.family == 'tree-ears' and self.ears < 0:
                raise GeneratorSpecError(f"ears は 0 以上です（現在値: {self.ears}）")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'n': self.n,
            'delta': self.delta,
            'seed': self.seed,
            'm': self.m,
            'ears': self.ears,
            'base': self.base.to_dict() if self.base is not None else None
        }


def generate(spec: GeneratorSpec) -> Graph:
    """
    指定に従ってグラフを生成

    パラメータ:
        spec (GeneratorSpec): 生成器の指定

    戻り値:
        Graph: 生成されたグラフ
    """
    builders = {
        'path': lambda: Graph.from_networkx(nx.path_graph(spec.n)),
        'cycle': lambda: Graph.from_networkx(nx.cycle_graph(spec.n)),
        'star': lambda: Graph.from_networkx(nx.star_graph(spec.delta if spec.delta is not None else spec.n)),
        'tightness': lambda: tightness_graph(spec.delta),
        'full-subdivision': lambda: full_subdivision(spec.base),
        'random-tree': lambda: random_tree(spec.n, spec.seed),
        'complete': lambda: Graph.from_networkx(nx.complete_graph(spec.n)),
        'wheel': lambda: Graph.from_networkx(nx.wheel_graph(spec.n)),
        'random-subdivision': lambda: random_subdivision(spec.n, spec.m, spec.seed),
        'tree-ears': lambda: tree_with_ears(spec.n, spec.ears, spec.seed),
    }
    graph = builders[spec.family]()
    logger.debug("生成: %s -> %r", spec.family, graph)
    return graph


def tightness_graph(delta: int) -> Graph:
    """
    K_{2,Δ} の中央の頂点 c に Δ-2 本のペンダント辺を付けたグラフ

    頂点: a=0, b=1, 中央 2..Δ+1（最後が c）, ペンダント Δ+2..2Δ-1
    a, b, c の次数がちょうど Δ、辺数は 3Δ-2。
    """
    if delta < 2:
        raise GeneratorSpecError(f"tightness には Δ ≥ 2 が必要です（現在値: {delta}）")

    a, b = 0, 1
    middles = list(range(2, delta + 2))
    c = middles[-1]
    pendants = list(range(delta + 2, 2 * delta))

    edges = [(a, m) for m in middles] + [(b, m) for m in middles] + [(c, p) for p in pendants]
    labels = ['a', 'b'] + [f"m{i}" for i in range(1, delta)] + ['c'] + [f"p{i}" for i in range(1, delta - 1)]
    return Graph.from_edges(edges, n=2 * delta, labels=labels)


def full_subdivision(base: Graph) -> Graph:
    """各辺 uv を新しい頂点 w を挟んだ道 u-w-v に置き換える"""
    edges: List[EdgePair] = []
    for i, (u, v) in enumerate(base.sorted_edges()):
        w = base.n + i
        edges.append((u, w))
        edges.append((v, w))

    labels = None
    if base.labels is not None:
        labels = list(base.labels) + [f"{base.labels[u]}~{base.labels[v]}" for u, v in base.sorted_edges()]
    return Graph.from_edges(edges, n=base.n + base.num_edges, labels=labels)


def random_tree(n: int, seed: int) -> Graph:
    """Prüfer 列による一様ランダム木"""
    if n == 1:
        return Graph(n=1, edges=frozenset())
    if n == 2:
        return Graph.from_edges([(0, 1)])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_subdivision(n: int, m: Optional[int], seed: int) -> Graph:
    """G(n, m) ランダムグラフの完全細分"""
    if m is None:
        m = min(2 * n, n * (n - 1) // 2)
    base = Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))
    return full_subdivision(base)


def tree_with_ears(n: int, ears: int, seed: int) -> Graph:
    """
    ランダム木に細分された耳（新しい内部頂点を持つ道）を追加

    各耳は追加後もグラフが chordless である場合だけ残す。
    """
    from src.structure.cycles import is_chordless

    rng = random.Random(seed)
    graph = random_tree(n, seed)
    if n < 2:
        return graph

    for _ in range(ears):
        u, v = rng.sample(range(n), 2)
        length = rng.randint(1, 3)
        fresh = list(range(graph.n, graph.n + length))
        walk = [u] + fresh + [v]
        candidate = Graph(
            n=graph.n + length,
            edges=graph.edges | {canonical_edge(x, y) for x, y in zip(walk, walk[1:])}
        )
        if is_chordless(candidate).chordless:
            graph = candidate
    return graph


def add_random_chord(g: Graph, seed: int) -> Tuple[Graph, EdgePair, List[int]]:
    """
    既知の閉路に弦を 1 本追加した変異グラフを作る

    戻り値:
        (変異グラフ, 追加した弦, 弦を持つ閉路の頂点列)

    例外:
        GeneratorSpecError: 長さ 4 以上の閉路がなく弦を追加できない場合
    """
    rng = random.Random(seed)
    cycles = [c for c in nx.cycle_basis(g.to_networkx()) if len(c) >= 4]
    rng.shuffle(cycles)
    for cycle in cycles:
        k = len(cycle)
        candidates = [
            (cycle[i], cycle[j])
            for i in range(k) for j in range(i + 2, k)
            if not (i == 0 and j == k - 1) and not g.has_edge(cycle[i], cycle[j])
        ]
        if candidates:
            chord = canonical_edge(*rng.choice(candidates))
            return g.with_edge(chord), chord, list(cycle)
    raise GeneratorSpecError("弦を追加できる閉路（長さ 4 以上）がありません")
