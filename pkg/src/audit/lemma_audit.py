"""
構造補題の監査

chordless コーパスの各グラフとマッチングに対して、ブロック構造・縮約・赤 / 青の辺・
2-縮退・strong 辺彩色の各性質を検査し、失敗には再検証できる証拠（グラフ・マッチング・
違反したオブジェクト）を付ける。
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import networkx as nx

from src.audit.corpus import CorpusEntry, CorpusSpec, build_corpus, random_matching, random_submatching
from src.coloring import (
    DegeneracyOrdering, chromatic_index_coloring, conflict_graph,
    degeneracy_ordering, edge_color_exact, edge_color_vizing, exact_chi_s, greedy_color,
    is_proper_on_conflict_graph, min_degree_witness, strong_color_chordless,
    strong_color_paths_cycles, tightness_audit, verify_strong
)
from src.contraction import (
    ContractedGraph, contract, contracted_induced, expand_path, induced_by_matching,
    matchings_from_edge_coloring, path_respects_quotient
)
from src.data_sources import add_random_chord, load_edge_list, serialize_edge_list, tightness_graph
from src.models import Graph, Matching, ProperEdgeColoring, StrongEdgeColoring, induced_subgraph, unflatten_color
from src.models.errors import EdgeColoringError, GeneratorSpecError
from src.structure import (
    blocks, check_property_P, edge_removal_report, in_common_cycle, in_common_cycle_by_flow,
    is_chordless, is_connected, is_minimally_2connected, is_two_connected,
    leafblock_component_check, leafblocks, menger_pair, remove_leafblock_interiors
)

logger = logging.getLogger(__name__)

# 失敗 1 件ごとに保存する証拠の上限
MAX_WITNESSES = 5

# 監査項目（レポートはこの順に並ぶ）
CHECKS = (
    'generator-invariants',
    'edge-list-round-trip',
    'block-invariants',
    'leafblocks',
    'common-cycle',
    'recognition',
    'recognition-mutants',
    'edge-removal',
    'menger-pairs',
    'edge-coloring-exact',
    'edge-coloring-enumeration',
    'vizing-bound',
    'contraction-structure',
    'contracted-induced',
    'expand-path',
    'red-edge-bound',
    'red-edge-degree',
    'red-anchor-injective',
    'property-p-inheritance',
    'blue-edge-lemmas',
    'two-degeneracy',
    'degree-two-vertices',
    'strong-pipeline',
    'strong-verifier-agreement',
    'oracle-crosscheck',
    'tightness',
)


@dataclass
class CheckResult:
    """監査項目 1 つの集計"""

    name: str
    instances: int = 0
    failure_count: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, witness: Callable[[], Dict[str, Any]]) -> None:
        """1 件の検査結果を記録（失敗時だけ証拠を作る）"""
        self.instances += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'instances': self.instances,
            'failures': self.failure_count,
            'witnesses': self.failures
        }


@dataclass
class AuditReport:
    """監査結果（全項目が成功したときだけ passed）"""

    corpus: CorpusSpec
    graphs: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'corpus': self.corpus.to_dict(),
            'graphs': self.graphs,
            'passed': self.passed,
            'totals': {
                'checks': len(self.checks),
                'passed': sum(1 for c in self.checks if c.passed),
                'failed': sum(1 for c in self.checks if not c.passed),
                'instances': sum(c.instances for c in self.checks)
            },
            'checks': [c.to_dict() for c in self.checks]
        }


def _witness(g: Graph, **extra: Any) -> Dict[str, Any]:
    data: Dict[str, Any] = {'graph': g.to_dict()}
    data.update(extra)
    return data


def _has_red_assignment(host: Graph, degree: Dict[int, int], pair1, pair2) -> bool:
    """赤の定義を満たす割り当てがあるか（分類とは別に全列挙）"""
    for first, second in itertools.permutations((pair1, pair2)):
        for p, q in itertools.permutations(first):
            for r, _ in itertools.permutations(second):
                if host.has_edge(p, r) and degree[p] == 2 and degree[q] > 2:
                    return True
    return False


def _brute_force_edge_colorable(g: Graph, k: int) -> bool:
    """k 色の proper 辺彩色を全列挙で探す"""
    edges = g.sorted_edges()
    for assignment in itertools.product(range(1, k + 1), repeat=len(edges)):
        seen = set()
        ok = True
        for (u, v), c in zip(edges, assignment):
            if (u, c) in seen or (v, c) in seen:
                ok = False
                break
            seen.add((u, c))
            seen.add((v, c))
        if ok:
            return True
    return False


class LemmaAuditor:
    """
    コーパス全体の監査を実行するクラス

    【使用例】
    report = LemmaAuditor(CorpusSpec(count=50, seed=7)).run()
    report.passed
    """

    def __init__(
        self,
        spec: CorpusSpec,
        budget: Optional[int] = None,
        samples: int = 4,
        random_matchings: int = 2,
        oracle_edges: int = 12,
        enumeration_limit: int = 200_000
    ):
        """
        パラメータ:
            spec (CorpusSpec): コーパスの指定
            budget (int, optional): 厳密辺彩色の探索ノード予算
            samples (int): グラフ・マッチングごとの部分集合サンプル数
            random_matchings (int): 色クラスに加えて試すランダムマッチング（極大と部分）の数
            oracle_edges (int): オラクルと突き合わせるグラフの辺数上限
            enumeration_limit (int): 全列挙の組合せ数の上限
        """
        self.spec = spec
        self.budget = budget
        self.samples = samples
        self.random_matchings = random_matchings
        self.oracle_edges = oracle_edges
        self.enumeration_limit = enumeration_limit
        self.rng = random.Random(spec.seed)
        self.results = {name: CheckResult(name=name) for name in CHECKS}

    def run(self) -> AuditReport:
        """監査を実行してレポートを返す"""
        corpus = build_corpus(self.spec)
        if corpus:
            self._audit_fixed()

        for i, entry in enumerate(corpus, 1):
            logger.debug("監査中 %d/%d: %s", i, len(corpus), entry.name)
            self._audit_entry(entry)

        report = AuditReport(corpus=self.spec, graphs=len(corpus), checks=[self.results[n] for n in CHECKS])
        if report.passed:
            logger.info("✅ 監査成功: %d グラフ / %d 項目", len(corpus), len(CHECKS))
        else:
            failed = [c.name for c in report.checks if not c.passed]
            logger.error("❌ 監査失敗: %s", ", ".join(failed))
        return report

    # =====================================
    # 【コーパス以外の固定検査】
    # =====================================

    def _audit_fixed(self) -> None:
        check = self.results['recognition']
        for name, g, expected in (
            ('K4', Graph.from_networkx(nx.complete_graph(4)), False),
            ('W6', Graph.from_networkx(nx.wheel_graph(6)), False),
        ):
            report = is_chordless(g)
            ok = report.chordless == expected and report.witness is not None and report.witness.verify(g)
            check.record(ok, lambda g=g, name=name, report=report: _witness(g, name=name, result=report.to_dict()))

        c5 = Graph.from_networkx(nx.cycle_graph(5))
        check.record(is_minimally_2connected(c5), lambda: _witness(c5, name='C5', expected='minimally-2-connected'))
        t3 = tightness_graph(3)
        check.record(
            not is_minimally_2connected(t3),
            lambda: _witness(t3, name='tightness(3)', expected='not minimally-2-connected')
        )

        tightness = self.results['tightness']
        for delta in range(2, 9):
            report = tightness_audit(delta)
            tightness.record(report.holds, lambda report=report: report.to_dict())

    # =====================================
    # 【グラフごとの検査】
    # =====================================

    def _audit_entry(self, entry: CorpusEntry) -> None:
        g = entry.graph
        self._audit_generator(entry)
        self._audit_blocks(g)
        self._audit_recognition(g)
        if g.num_edges == 0:
            return

        f = self._audit_edge_coloring(g)
        matchings: List[Matching] = matchings_from_edge_coloring(g, f)
        matchings += [random_matching(g, self.rng) for _ in range(self.random_matchings)]
        matchings += [random_submatching(g, self.rng) for _ in range(self.random_matchings)]
        for m in matchings:
            self._audit_contraction(g, m)

        self._audit_strong(g)

    def _audit_generator(self, entry: CorpusEntry) -> None:
        g, spec = entry.graph, entry.spec
        check = self.results['generator-invariants']
        if spec.family == 'tightness':
            d = spec.delta
            top = sum(1 for v in g.vertices() if g.degree(v) == d)
            # Δ=2 では K_{2,2} の 4 頂点すべてが次数 2
            ok = top == (3 if d >= 3 else 4) and g.num_edges == 3 * d - 2 and g.n == 2 * d and g.max_degree() == d
            check.record(ok, lambda: _witness(g, family=spec.family, delta=d))
        elif spec.family in ('full-subdivision', 'random-subdivision'):
            ok = nx.is_bipartite(g.to_networkx())
            if spec.base is not None:
                ok = ok and g.n == spec.base.n + spec.base.num_edges and g.num_edges == 2 * spec.base.num_edges
            check.record(ok, lambda: _witness(g, family=spec.family, expected='even cycles only'))

        first = load_edge_list(serialize_edge_list(g))
        second = load_edge_list(serialize_edge_list(first))
        self.results['edge-list-round-trip'].record(
            first == second and first.edges == g.edges and first.n == g.n,
            lambda: _witness(g, reloaded=second.to_dict())
        )

    def _audit_blocks(self, g: Graph) -> None:
        d = blocks(g)
        check = self.results['block-invariants']

        covered = [e for b in d.blocks for e in b.edges]
        partition = len(covered) == len(set(covered)) and set(covered) == g.edges
        cut_rule = all((v in d.cutvertices) == (len(d.blocks_of(v)) >= 2) for v in g.vertices())
        block_rule = all(
            b.is_single_edge() or is_two_connected(induced_subgraph(g, b.vertices).graph) for b in d.blocks
        )
        tree = nx.Graph()
        for node, neighbors in d.tree.items():
            tree.add_node(node)
            tree.add_edges_from((node, other) for other in neighbors)
        components = [c for c in nx.connected_components(g.to_networkx()) if len(c) > 1]
        tree_rule = (tree.number_of_nodes() == 0 and not components) or (
            nx.is_forest(tree) and nx.number_connected_components(tree) == len(components)
        )
        check.record(
            partition and cut_rule and block_rule and tree_rule,
            lambda: _witness(
                g, decomposition=d.to_dict(),
                partition=partition, cutvertex_rule=cut_rule, block_rule=block_rule, tree_rule=tree_rule
            )
        )

        leaf_check = self.results['leafblocks']
        for component in sorted(sorted(c) for c in components):
            sub = induced_subgraph(g, component).graph
            if is_two_connected(sub):
                continue
            leaves = leafblocks(blocks(sub))
            leaf_check.record(len(leaves) >= 2, lambda sub=sub, leaves=leaves: _witness(
                sub, leafblocks=[r.to_dict() for r in leaves]
            ))
            for report in leaves:
                leaf_check.record(
                    leafblock_component_check(sub, report),
                    lambda sub=sub, report=report: _witness(sub, leafblock=report.to_dict(), claim='B-u is a component of G-u')
                )
            rest = remove_leafblock_interiors(sub, leaves)
            leaf_check.record(
                is_connected(rest.graph),
                lambda sub=sub, leaves=leaves: _witness(sub, removed=[r.to_dict() for r in leaves], claim='G-X connected')
            )

        self._audit_common_cycle(g, d)
        self._audit_minimal_blocks(g, d)

    def _audit_common_cycle(self, g: Graph, d) -> None:
        if g.n < 2:
            return
        check = self.results['common-cycle']
        nx_graph = g.to_networkx()
        for _ in range(2 * self.samples):
            a, b = self.rng.sample(range(g.n), 2)
            answer = in_common_cycle(g, a, b, decomposition=d)
            by_flow = in_common_cycle_by_flow(g, a, b)
            by_block = d.shared_block(a, b, min_size=3) is not None
            ok = answer.holds == by_flow == by_block
            if ok and not answer.holds and not g.has_edge(a, b) and not answer.disconnected:
                x = answer.separator
                ok = x is not None and not nx.has_path(nx.restricted_view(nx_graph, [x], []), a, b)
            check.record(ok, lambda a=a, b=b, answer=answer, by_flow=by_flow: _witness(
                g, a=a, b=b, answer=answer.to_dict(), by_flow=by_flow, by_block=by_block
            ))

    def _audit_minimal_blocks(self, g: Graph, d) -> None:
        """chordless なグラフのブロック（頂点 3 以上）は極小 2 連結"""
        removal = self.results['edge-removal']
        menger = self.results['menger-pairs']
        candidates = [b for b in d.blocks if b.size >= 3]
        for block in candidates[:3]:
            bg = induced_subgraph(g, block.vertices).graph
            edges = bg.sorted_edges()
            for e in self.rng.sample(edges, min(3, len(edges))):
                if is_two_connected(bg.without_edge(e)):
                    removal.record(False, lambda bg=bg, e=e: _witness(bg, edge=list(e), claim='block is minimally 2-connected'))
                    continue
                report = edge_removal_report(bg, e)
                removal.record(report.holds, lambda bg=bg, report=report: _witness(bg, report=report.to_dict()))

            for _ in range(self.samples):
                x = self.rng.randrange(bg.n)
                y, z = self.rng.sample(range(bg.n), 2)
                pair = menger_pair(bg, x, y, z)
                menger.record(pair.verify(bg, y, z), lambda bg=bg, pair=pair, y=y, z=z: _witness(
                    bg, paths=pair.to_dict(), y=y, z=z
                ))

    def _audit_recognition(self, g: Graph) -> None:
        report = is_chordless(g)
        self.results['recognition'].record(report.chordless, lambda: _witness(g, result=report.to_dict()))

        try:
            mutant, chord, cycle = add_random_chord(g, self.rng.randrange(2 ** 32))
        except GeneratorSpecError:
            return
        verdict = is_chordless(mutant)
        ok = not verdict.chordless and verdict.witness is not None and verdict.witness.verify(mutant)
        self.results['recognition-mutants'].record(ok, lambda: _witness(
            mutant, planted_chord=list(chord), cycle=cycle, result=verdict.to_dict()
        ))

    def _audit_edge_coloring(self, g: Graph) -> ProperEdgeColoring:
        delta = g.max_degree()
        if delta >= 3 and g.num_edges <= 60:
            result = edge_color_exact(g, delta, self.budget)
            ok = isinstance(result, ProperEdgeColoring) and not result.violations(g) and set(result.colors) == g.edges
            self.results['edge-coloring-exact'].record(ok, lambda: _witness(g, k=delta, result=type(result).__name__))

        if g.num_edges <= 10:
            for k in range(1, delta + 1):
                if k ** g.num_edges > self.enumeration_limit:
                    break
                exact = edge_color_exact(g, k, self.budget)
                brute = _brute_force_edge_colorable(g, k)
                self.results['edge-coloring-enumeration'].record(
                    isinstance(exact, ProperEdgeColoring) == brute,
                    lambda k=k, exact=exact, brute=brute: _witness(g, k=k, search=type(exact).__name__, enumeration=brute)
                )

        vizing = edge_color_vizing(g)
        try:
            vizing.ensure_valid(g)
            ok = vizing.num_colors <= delta + 1
        except EdgeColoringError:
            ok = False
        self.results['vizing-bound'].record(ok, lambda: _witness(g, coloring=vizing.to_dict()))

        return chromatic_index_coloring(g, budget=self.budget)

    # =====================================
    # 【縮約・赤 / 青・縮退】
    # =====================================

    def _sample_subsets(self, n: int, minimum: int = 1) -> List[List[int]]:
        subsets = [list(range(n))] if n >= minimum else []
        if n < minimum:
            return subsets
        for _ in range(self.samples):
            size = self.rng.randint(minimum, n)
            subsets.append(sorted(self.rng.sample(range(n), size)))
        return subsets

    def _audit_contraction(self, g: Graph, m: Matching) -> None:
        cg = contract(g, m)
        q = cg.quotient
        matching = [list(e) for e in m.sorted_edges()]

        def witness(**extra: Any) -> Dict[str, Any]:
            return _witness(g, matching=matching, **extra)

        self._check_contraction_structure(g, m, cg, witness)

        for subset in self._sample_subsets(q.n):
            restricted = contracted_induced(cg, subset)
            fresh = contract(g, m.restrict(cg.provenance[v] for v in subset))
            ok = (
                restricted.quotient == fresh.quotient
                and restricted.provenance == fresh.provenance
                and restricted.classification == fresh.classification
            )
            self.results['contracted-induced'].record(ok, lambda subset=subset: witness(subset=subset))

        for _ in range(self.samples):
            if q.n == 0:
                break
            qpath = self._random_quotient_path(q)
            path = expand_path(cg, qpath)
            self.results['expand-path'].record(
                path_respects_quotient(cg, qpath, path),
                lambda qpath=qpath, path=path: witness(quotient_path=qpath, host_path=path)
            )

        self._check_red_lemmas(cg, witness)
        self._check_degeneracy(q, witness)
        self._check_blue_lemmas(g, cg, witness)

    def _check_contraction_structure(self, g: Graph, m: Matching, cg: ContractedGraph, witness) -> None:
        q = cg.quotient
        gm = induced_by_matching(g, m)
        degree = {gm.to_original(v): gm.graph.degree(v) for v in gm.graph.vertices()}

        owner = {}
        for i, (a, b) in enumerate(cg.provenance):
            owner[a] = owner[b] = i
        expected = {
            (min(owner[u], owner[v]), max(owner[u], owner[v]))
            for u, v in gm.original_edges() if owner[u] != owner[v]
        }

        ok = q.n == len(m) and q.edges == expected and set(cg.classification) == q.edges and degree == cg.gm_degree
        problems = []
        for e in sorted(cg.classification):
            cls = cg.classification[e]
            pair1, pair2 = cg.provenance[e[0]], cg.provenance[e[1]]
            if cls.is_red:
                good = cg.verify_red_witness(e, cls.witness)
            else:
                good = not _has_red_assignment(g, degree, pair1, pair2)
            if not good:
                problems.append({'edge': list(e), 'color': cls.color})
        self.results['contraction-structure'].record(
            ok and not problems, lambda: witness(contracted=cg.to_dict(), problems=problems)
        )

    def _random_quotient_path(self, q: Graph) -> List[int]:
        path = [self.rng.randrange(q.n)]
        for _ in range(self.rng.randint(0, 5)):
            options = [w for w in q.neighbors(path[-1]) if w not in path]
            if not options:
                break
            path.append(self.rng.choice(options))
        return path

    def _check_red_lemmas(self, cg: ContractedGraph, witness) -> None:
        red = cg.red_edges()

        anchors = [cg.red_anchor(e) for e in red]
        injective = len({v for _, v in anchors}) == len(anchors) and all(
            v in e for e, (_, v) in zip(red, anchors)
        )
        self.results['red-anchor-injective'].record(injective, lambda: witness(
            red_edges=[list(e) for e in red], anchors=[list(a) for a in anchors]
        ))

        for subset in self._sample_subsets(cg.quotient.n):
            inside = set(subset)
            edges = [e for e in red if e[0] in inside and e[1] in inside]
            if not edges:
                continue
            touched = {v for e in edges for v in e}
            self.results['red-edge-bound'].record(
                len(edges) <= len(touched),
                lambda subset=subset, edges=edges: witness(subset=subset, red_edges=[list(e) for e in edges])
            )

            degree = {v: 0 for v in subset}
            for x, y in edges:
                degree[x] += 1
                degree[y] += 1
            low = sum(1 for v in subset if degree[v] <= 2)
            single_edge = len(subset) == 2 and len(edges) == 1
            self.results['red-edge-degree'].record(
                low >= 3 or single_edge,
                lambda subset=subset, edges=edges: witness(subset=subset, red_edges=[list(e) for e in edges])
            )

    def _check_degeneracy(self, q: Graph, witness) -> None:
        ordering = degeneracy_ordering(q, 2)
        ok = isinstance(ordering, DegeneracyOrdering) and ordering.is_valid_for(q)
        if ok:
            coloring = greedy_color(q, ordering)
            ok = coloring.is_proper(q) and coloring.colors_used <= 3
        if ok and q.n:
            ok = max(nx.core_number(q.to_networkx()).values()) <= 2
        self.results['two-degeneracy'].record(ok, lambda: witness(
            quotient=q.to_dict(), result=ordering.to_dict()
        ))

        for subset in self._sample_subsets(q.n, minimum=2):
            sub = induced_subgraph(q, subset).graph
            low = min_degree_witness(sub)
            self.results['degree-two-vertices'].record(
                len(low) >= 2, lambda subset=subset: witness(quotient=q.to_dict(), subset=subset)
            )

    def _check_blue_lemmas(self, g: Graph, cg: ContractedGraph, witness) -> None:
        """G_M の頂点数 3 以上のブロックごとに、M' で性質 P が成り立つ場面を作って検査"""
        qd = blocks(cg.quotient)
        for block in qd.blocks:
            if block.size < 3:
                continue
            sub = contracted_induced(cg, block.vertices)
            pairs = [list(p) for p in sub.provenance]

            prop = check_property_P(g, sub.matching)
            self.results['property-p-inheritance'].record(prop.holds, lambda pairs=pairs, prop=prop: witness(
                submatching=pairs, result=prop.to_dict()
            ))
            if not prop.holds:
                continue

            self._check_blue_in(sub, sub.quotient, lambda pairs=pairs, **extra: witness(submatching=pairs, **extra))

            # 2 連結な部分グラフ H でも同じ性質が成り立つ
            for subset in self._sample_subsets(sub.quotient.n, minimum=3):
                view = induced_subgraph(sub.quotient, subset)
                for inner in blocks(view.graph).blocks:
                    if inner.size < 3:
                        continue
                    h_view = induced_subgraph(view.graph, inner.vertices)
                    originals = [view.to_original(h_view.to_original(v)) for v in h_view.graph.vertices()]
                    self._check_blue_in(
                        sub, h_view.graph,
                        lambda pairs=pairs, originals=originals, **extra: witness(
                            submatching=pairs, subgraph=originals, **extra
                        ),
                        originals=originals
                    )

    def _check_blue_in(
        self,
        cg: ContractedGraph,
        h: Graph,
        witness,
        originals: Optional[Sequence[int]] = None
    ) -> None:
        """
        2 連結で単一辺でない H について:
            青の辺 e があれば H-e は 2 連結でなく、リーフブロックがちょうど 2 つで、
            それぞれに H で次数 2 以下かつ H-e の切断点でない頂点がある。
            青の辺がなければ H に次数 2 以下の頂点が 3 つ以上ある。
        """
        to_cg = list(originals) if originals is not None else list(range(h.n))
        check = self.results['blue-edge-lemmas']
        blue = [
            (x, y) for x, y in h.sorted_edges()
            if not cg.edge_class((to_cg[x], to_cg[y])).is_red
        ]

        if not blue:
            low = [v for v in h.vertices() if h.degree(v) <= 2]
            check.record(len(low) >= 3, lambda: witness(quotient=h.to_dict(), claim='three vertices of degree <= 2'))
            return

        for e in blue:
            rest = h.without_edge(e)
            ok = not is_two_connected(rest)
            leaves = []
            if ok:
                d = blocks(rest)
                leaves = leafblocks(d)
                ok = len(leaves) == 2 and all(
                    any(h.degree(v) <= 2 and v not in d.cutvertices for v in leaf.vertices)
                    for leaf in leaves
                )
            check.record(ok, lambda e=e, leaves=leaves: witness(
                quotient=h.to_dict(), blue_edge=list(e), leafblocks=[r.to_dict() for r in leaves]
            ))

    # =====================================
    # 【strong 辺彩色】
    # =====================================

    def _audit_strong(self, g: Graph) -> None:
        report = strong_color_chordless(g, budget=self.budget)
        coloring = report.coloring
        verdict = verify_strong(g, coloring)
        delta = report.delta

        ok = bool(verdict) and coloring.colors_used <= report.bound_claimed
        if delta <= 2:
            ok = ok and coloring.colors_used <= 5
        elif report.edge_coloring_path == 'exact':
            ok = ok and coloring.colors_used <= 3 * delta
        if coloring.pairs is not None:
            ok = ok and all(unflatten_color(coloring.colors[e]) == p for e, p in coloring.pairs.items())
        self.results['strong-pipeline'].record(ok, lambda: _witness(g, report=report.to_dict(), verdict=verdict.to_dict()))

        agreement = self.results['strong-verifier-agreement']
        cg = conflict_graph(g)
        agreement.record(
            is_proper_on_conflict_graph(g, coloring, cg) == bool(verdict),
            lambda: _witness(g, coloring=coloring.to_dict())
        )
        if cg.graph.num_edges:
            i, j = min(cg.graph.edges)
            broken = dict(coloring.colors)
            broken[cg.edges[j]] = broken[cg.edges[i]]
            bad = StrongEdgeColoring(colors=broken)
            agreement.record(
                not verify_strong(g, bad) and not is_proper_on_conflict_graph(g, bad, cg),
                lambda: _witness(g, coloring=bad.to_dict())
            )

        if g.num_edges <= self.oracle_edges:
            oracle = exact_chi_s(g, cap=self.oracle_edges)
            limit = 5 if delta <= 2 else 3 * delta
            ok = oracle.is_optimal and oracle.value <= coloring.colors_used and oracle.value <= limit
            if ok and delta <= 2:
                ok = strong_color_paths_cycles(g).colors_used == oracle.value
            self.results['oracle-crosscheck'].record(ok, lambda: _witness(
                g, oracle=oracle.to_dict(), pipeline_colors=coloring.colors_used
            ))


def run_audit(spec: CorpusSpec, budget: Optional[int] = None, **options: Any) -> AuditReport:
    """LemmaAuditor(spec, budget, **options).run() の便利関数"""
    return LemmaAuditor(spec, budget=budget, **options).run()
