"""
マッチングによる縮約グラフ G_M

G[M] はマッチングの端点が誘導する部分グラフ、G_M は G[M] の各マッチング辺 e を
頂点 v_e に縮約して多重辺を除いたもの。G_M の各辺は赤 / 青に分類する:

    辺 v_ab v_cd は {{p,q},{r,s}} = {{a,b},{c,d}} で
    pr ∈ E(G), d_G[M](p) = 2, d_G[M](q) > 2 を満たす割り当てがあれば赤、なければ青。
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.models import Graph, Matching, ProperEdgeColoring, SubgraphView, induced_subgraph
from src.models.errors import InvalidVertexError, MatchingError
from src.models.graph import EdgePair, canonical_edge

logger = logging.getLogger(__name__)

RED = 'red'
BLUE = 'blue'


@dataclass(frozen=True)
class RedWitness:
    """赤の証拠となる割り当て (p, q, r, s)"""

    p: int
    q: int
    r: int
    s: int

    def to_list(self) -> List[int]:
        return [self.p, self.q, self.r, self.s]


@dataclass(frozen=True)
class EdgeClass:
    color: str
    witness: Optional[RedWitness] = None

    @property
    def is_red(self) -> bool:
        return self.color == RED


def _assignments(pair1: EdgePair, pair2: EdgePair) -> Iterable[Tuple[int, int, int, int]]:
    """{{p,q},{r,s}} = {pair1, pair2} の 8 通りを正規順で列挙"""
    for first, second in ((pair1, pair2), (pair2, pair1)):
        for p, q in (first, first[::-1]):
            for r, s in (second, second[::-1]):
                yield p, q, r, s


def classify_edge(host: Graph, gm_degree: Dict[int, int], pair1: EdgePair, pair2: EdgePair) -> EdgeClass:
    """商グラフの辺 v_pair1 v_pair2 を赤 / 青に分類（最初に見つかった証拠を保持）"""
    for p, q, r, s in _assignments(pair1, pair2):
        if host.has_edge(p, r) and gm_degree[p] == 2 and gm_degree[q] > 2:
            return EdgeClass(color=RED, witness=RedWitness(p, q, r, s))
    return EdgeClass(color=BLUE)


@dataclass(frozen=True)
class ContractedGraph:
    """
    縮約グラフ G_M と由来情報

    quotient の頂点 i はマッチング辺 provenance[i] を縮約した v_e。
    provenance はマッチング辺の正規順。
    """

    host: Graph
    matching: Matching
    quotient: Graph
    provenance: Tuple[EdgePair, ...]
    classification: Dict[EdgePair, EdgeClass]
    gm_degree: Dict[int, int]

    vertex_index: Dict[EdgePair, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.quotient.n != len(self.provenance):
            raise ValueError("商グラフの頂点数と由来の数が一致しません")
        object.__setattr__(self, 'vertex_index', {e: i for i, e in enumerate(self.provenance)})

    def vertex_of(self, matched_edge: Tuple[int, int]) -> int:
        """マッチング辺 e に対応する v_e"""
        e = canonical_edge(*matched_edge)
        if e not in self.vertex_index:
            raise MatchingError(f"辺 {e} はマッチングに含まれていません")
        return self.vertex_index[e]

    def pair(self, v: int) -> EdgePair:
        self.quotient.check_vertex(v)
        return self.provenance[v]

    def edge_class(self, quotient_edge: Tuple[int, int]) -> EdgeClass:
        return self.classification[canonical_edge(*quotient_edge)]

    def red_edges(self) -> List[EdgePair]:
        return [e for e in sorted(self.classification) if self.classification[e].is_red]

    def blue_edges(self) -> List[EdgePair]:
        return [e for e in sorted(self.classification) if not self.classification[e].is_red]

    def red_anchor(self, quotient_edge: Tuple[int, int]) -> Tuple[int, int]:
        """
        赤辺 e について (f(e), g(e)) = (p, v_pq) を返す

        例外:
            ValueError: e が青の場合
        """
        cls = self.edge_class(quotient_edge)
        if not cls.is_red:
            raise ValueError(f"辺 {quotient_edge} は赤ではありません")
        w = cls.witness
        return w.p, self.vertex_of((w.p, w.q))

    def verify_red_witness(self, quotient_edge: Tuple[int, int], witness: RedWitness) -> bool:
        """証拠 (p,q,r,s) が定義を満たすか"""
        x, y = canonical_edge(*quotient_edge)
        pairs = {self.provenance[x], self.provenance[y]}
        if {canonical_edge(witness.p, witness.q), canonical_edge(witness.r, witness.s)} != pairs:
            return False
        return (
            self.host.has_edge(witness.p, witness.r)
            and self.gm_degree[witness.p] == 2
            and self.gm_degree[witness.q] > 2
        )

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for e in sorted(self.classification):
            cls = self.classification[e]
            rows.append({
                'edge': list(e),
                'pairs': [list(self.provenance[e[0]]), list(self.provenance[e[1]])],
                'color': cls.color,
                'witness': cls.witness.to_list() if cls.witness else None
            })
        return {
            'vertices': [list(p) for p in self.provenance],
            'edges': rows
        }


def _check_matching(g: Graph, m: Matching) -> None:
    if m.host != g:
        bad = [e for e in m.sorted_edges() if not g.has_edge(*e)]
        if bad or m.host.n != g.n:
            raise MatchingError("マッチングのホストグラフが一致しません")


def induced_by_matching(g: Graph, m: Matching) -> SubgraphView:
    """G[M]: マッチングの端点が誘導する部分グラフ"""
    _check_matching(g, m)
    return induced_subgraph(g, m.endpoints())


def contract(g: Graph, m: Matching) -> ContractedGraph:
    """
    G_M を構築して全辺を赤 / 青に分類

    パラメータ:
        g (Graph): ホストグラフ
        m (Matching): g のマッチング

    戻り値:
        ContractedGraph: 商グラフ・由来・分類・d_G[M]

    例外:
        MatchingError: m が g のマッチングでない場合
    """
    _check_matching(g, m)
    provenance = tuple(m.sorted_edges())
    owner: Dict[int, int] = {}
    for i, (a, b) in enumerate(provenance):
        owner[a] = i
        owner[b] = i

    gm = induced_subgraph(g, owner.keys())
    gm_degree = {gm.to_original(v): gm.graph.degree(v) for v in gm.graph.vertices()}

    quotient_edges = set()
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            quotient_edges.add(canonical_edge(owner[u], owner[v]))

    quotient = Graph(n=len(provenance), edges=frozenset(quotient_edges))
    classification = {
        (x, y): classify_edge(g, gm_degree, provenance[x], provenance[y])
        for x, y in sorted(quotient_edges)
    }

    logger.debug(
        "縮約: |M|=%d, 商グラフの辺 %d（赤 %d）",
        len(provenance), len(quotient_edges), sum(c.is_red for c in classification.values())
    )
    return ContractedGraph(
        host=g,
        matching=m,
        quotient=quotient,
        provenance=provenance,
        classification=classification,
        gm_degree=gm_degree
    )


def contracted_induced(cg: ContractedGraph, vertices: Iterable[int]) -> ContractedGraph:
    """
    商グラフの誘導部分グラフ G'_M（= G_{M'}、M' = {e : v_e ∈ S}）

    商グラフの辺を制限し、d_G[M'] を M' の端点だけで数え直して分類し直す。

    例外:
        InvalidVertexError: S に存在しない縮約頂点が含まれる場合
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < cg.quotient.n):
            raise InvalidVertexError(f"縮約頂点 {v} は存在しません")
    index = {v: i for i, v in enumerate(keep)}
    provenance = tuple(cg.provenance[v] for v in keep)

    endpoints = {w for pair in provenance for w in pair}
    gm_degree = {
        w: sum(1 for x in cg.host.neighbors(w) if x in endpoints)
        for w in endpoints
    }

    edges = sorted(
        (index[x], index[y]) for x, y in cg.quotient.edges
        if x in index and y in index
    )
    classification = {
        (x, y): classify_edge(cg.host, gm_degree, provenance[x], provenance[y])
        for x, y in edges
    }

    return ContractedGraph(
        host=cg.host,
        matching=cg.matching.restrict(provenance),
        quotient=Graph(n=len(keep), edges=frozenset(edges)),
        provenance=provenance,
        classification=classification,
        gm_degree=gm_degree
    )


def _check_quotient_path(cg: ContractedGraph, qpath: Sequence[int]) -> None:
    if not qpath:
        raise ValueError("商グラフの道が空です")
    for v in qpath:
        if not (0 <= v < cg.quotient.n):
            raise ValueError(f"縮約頂点 {v} は存在しません")
    if len(set(qpath)) != len(qpath):
        raise ValueError(f"商グラフの道ではありません（頂点の重複）: {list(qpath)}")
    for x, y in zip(qpath, qpath[1:]):
        if not cg.quotient.has_edge(x, y):
            raise ValueError(f"商グラフの道ではありません（{x}-{y} は辺でない）: {list(qpath)}")


def _allowed_step(cg: ContractedGraph, position: Dict[int, int], u: int, w: int) -> bool:
    """展開した道で使ってよい辺か（マッチング辺、または隣り合うペア間のホスト辺）"""
    i, j = position[u], position[w]
    if i == j:
        return True
    return abs(i - j) == 1 and cg.host.has_edge(u, w)


def expand_path(cg: ContractedGraph, qpath: Sequence[int]) -> List[int]:
    """
    商グラフの道 v_{x1y1} ... v_{xkyk} をホストグラフの道に展開

    端点は最初と最後のペアに含まれ、頂点は道上のペアだけ、辺はマッチング辺か
    隣り合うペアを結ぶホスト辺だけを使う。決定的な近傍順での最短経路を返す。

    例外:
        ValueError: qpath が商グラフの道でない場合
    """
    _check_quotient_path(cg, qpath)
    position: Dict[int, int] = {}
    for i, v in enumerate(qpath):
        for w in cg.provenance[v]:
            position[w] = i

    sources = list(cg.provenance[qpath[0]])
    targets = set(cg.provenance[qpath[-1]])

    parent: Dict[int, Optional[int]] = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        if u in targets:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in cg.host.neighbors(u):
            if w in position and w not in parent and _allowed_step(cg, position, u, w):
                parent[w] = u
                queue.append(w)

    raise RuntimeError(f"展開できる道が見つかりません: {list(qpath)}")


def path_respects_quotient(cg: ContractedGraph, qpath: Sequence[int], path: Sequence[int]) -> bool:
    """展開された道が頂点集合・辺集合の制約を満たす単純道か"""
    if not path or len(set(path)) != len(path):
        return False
    position: Dict[int, int] = {}
    for i, v in enumerate(qpath):
        for w in cg.provenance[v]:
            position[w] = i
    if any(w not in position for w in path):
        return False
    if path[0] not in cg.provenance[qpath[0]] or path[-1] not in cg.provenance[qpath[-1]]:
        return False
    return all(
        cg.host.has_edge(u, w) and _allowed_step(cg, position, u, w)
        for u, w in zip(path, path[1:])
    )


def matchings_from_edge_coloring(g: Graph, f: ProperEdgeColoring) -> List[Matching]:
    """
    proper 辺彩色の色クラス E_i をマッチングとして返す（使われた色の昇順）

    例外:
        EdgeColoringError: f が proper でない、または全辺を覆わない場合
    """
    f.ensure_valid(g)
    classes: Dict[int, List[EdgePair]] = {}
    for e, c in sorted(f.colors.items()):
        classes.setdefault(c, []).append(e)
    return [Matching.of(g, classes[c]) for c in f.used_colors()]
