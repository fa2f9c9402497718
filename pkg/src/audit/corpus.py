"""
監査用の chordless コーパス

固定の小さなグラフ（tightness・閉路・道・完全細分）に続けて、
シードから決まるランダムなグラフ（G(n,m) の完全細分・耳付きの木・ランダム木）を並べる。
count は Δ ≥ 3 のグラフの数で、Δ ≤ 2 のグラフはその外側に含まれる。
"""

import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List

import networkx as nx

from src.data_sources.generators import GeneratorSpec, generate
from src.models import Graph, Matching

logger = logging.getLogger(__name__)


@dataclass
class CorpusSpec:
    """
    コーパスのパラメータ

    【使用例】
    CorpusSpec(count=200, seed=7)
    """

    count: int = 200
    seed: int = 7
    max_base_vertices: int = 30

    def __post_init__(self):
        if self.count < 0:
            raise ValueError(f"count は 0 以上で指定してください（現在値: {self.count}）")
        if self.max_base_vertices < 4:
            raise ValueError(f"max_base_vertices は 4 以上です（現在値: {self.max_base_vertices}）")

    def to_dict(self) -> Dict[str, Any]:
        return {'count': self.count, 'seed': self.seed, 'max_base_vertices': self.max_base_vertices}


@dataclass
class CorpusEntry:
    name: str
    graph: Graph
    spec: GeneratorSpec

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'graph': self.graph.to_dict()}


def _fixed_specs() -> List[GeneratorSpec]:
    specs = [GeneratorSpec(family='tightness', delta=d) for d in range(2, 9)]
    specs += [GeneratorSpec(family='cycle', n=n) for n in range(3, 13)]
    specs += [GeneratorSpec(family='path', n=n) for n in range(2, 14)]
    specs += [GeneratorSpec(family='star', delta=d) for d in (3, 5)]
    for k in (3, 4, 5):
        base = Graph.from_networkx(nx.complete_graph(k))
        specs.append(GeneratorSpec(family='full-subdivision', base=base))
    return specs


def _random_spec(rng: random.Random, index: int, max_base: int) -> GeneratorSpec:
    seed = rng.randrange(2 ** 32)
    kind = index % 3
    if kind == 0:
        n = rng.randint(4, max_base)
        m = rng.randint(n - 1, min(2 * n, n * (n - 1) // 2))
        return GeneratorSpec(family='random-subdivision', n=n, m=m, seed=seed)
    if kind == 1:
        return GeneratorSpec(family='tree-ears', n=rng.randint(6, 20), ears=rng.randint(1, 6), seed=seed)
    return GeneratorSpec(family='random-tree', n=rng.randint(4, 24), seed=seed)


def _name(spec: GeneratorSpec) -> str:
    if spec.family == 'full-subdivision':
        return f"full-subdivision(K{spec.base.n})"
    if spec.family in ('tightness', 'star'):
        return f"{spec.family}({spec.delta})"
    if spec.family in ('path', 'cycle'):
        return f"{spec.family}({spec.n})"
    return f"{spec.family}(n={spec.n}, seed={spec.seed})"


def build_corpus(spec: CorpusSpec) -> List[CorpusEntry]:
    """
    コーパスを生成（同じ spec なら常に同じ列）

    パラメータ:
        spec (CorpusSpec): 件数・シード・基底グラフの最大頂点数

    戻り値:
        List[CorpusEntry]: Δ ≥ 3 のグラフがちょうど count 件になるまでの列
    """
    rng = random.Random(spec.seed)
    fixed = iter(_fixed_specs())
    entries: List[CorpusEntry] = []
    wide = 0
    index = 0
    while wide < spec.count:
        s = next(fixed, None)
        if s is None:
            s = _random_spec(rng, index, spec.max_base_vertices)
            index += 1
        g = generate(s)
        entries.append(CorpusEntry(name=_name(s), graph=g, spec=s))
        if g.max_degree() >= 3:
            wide += 1

    logger.info("📡 コーパスを生成しました: %d グラフ（Δ ≥ 3: %d、seed=%d）", len(entries), wide, spec.seed)
    return entries


def random_matching(g: Graph, rng: random.Random) -> Matching:
    """辺をシャッフルして貪欲に選んだ極大マッチング"""
    edges = g.sorted_edges()
    rng.shuffle(edges)
    used = set()
    chosen = []
    for u, v in edges:
        if u not in used and v not in used:
            chosen.append((u, v))
            used.update((u, v))
    return Matching.of(g, chosen)



def random_submatching(g: Graph, rng: random.Random) -> Matching:
    """
    ランダムな極大マッチングから各辺を確率 1/2 で残した部分マッチング

    辺のあるグラフでは少なくとも 1 辺を残す。
    """
    full = random_matching(g, rng).sorted_edges()
    kept = [e for e in full if rng.random() < 0.5]
    if not kept and full:
        kept = [rng.choice(full)]
    return Matching.of(g, kept)
