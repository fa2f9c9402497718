"""
縮約グラフ G_M のユニットテスト
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.audit import random_matching
from src.contraction import (
    BLUE, RED, RedWitness, contract, contracted_induced, expand_path, induced_by_matching,
    matchings_from_edge_coloring, path_respects_quotient
)
from src.coloring import edge_color_exact
from src.data_sources import GeneratorSpec, generate, tightness_graph
from src.models import Matching, ProperEdgeColoring
from src.models.errors import EdgeColoringError, InvalidVertexError, MatchingError
from tests.conftest import cycle, path, red_example, star

corpus_graphs = st.builds(
    lambda seed, n: generate(GeneratorSpec(family='random-subdivision', n=n, seed=seed)),
    st.integers(min_value=0, max_value=2 ** 32),
    st.integers(min_value=4, max_value=9)
)


class TestInducedByMatching:
    """induced_by_matching のテストスイート"""

    def test_path(self):
        """道 0-1-2-3, M={01,23} → 道全体"""
        g = path(4)
        view = induced_by_matching(g, Matching.of(g, [(0, 1), (2, 3)]))
        assert view.original_edges() == g.sorted_edges()

    def test_cycle(self):
        """C6, M={01,34} → {0,1,3,4} 上の辺 {01,34}"""
        g = cycle(6)
        view = induced_by_matching(g, Matching.of(g, [(0, 1), (3, 4)]))
        assert view.original_ids == (0, 1, 3, 4)
        assert view.original_edges() == [(0, 1), (3, 4)]

    def test_empty_matching(self):
        """M = ∅ → 空グラフ"""
        g = cycle(6)
        assert induced_by_matching(g, Matching.of(g, [])).graph.n == 0

    def test_foreign_matching(self):
        """別のグラフのマッチングでエラーが発生するか"""
        m = Matching.of(cycle(6), [(2, 3)])
        with pytest.raises(MatchingError):
            induced_by_matching(path(3), m)


class TestContract:
    """contract のテストスイート"""

    def test_path(self):
        """道 0-1-2-3, M={01,23} → 青い辺 1 本の K2"""
        g = path(4)
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3)]))
        assert cg.quotient.n == 2
        assert cg.quotient.sorted_edges() == [(0, 1)]
        assert cg.edge_class((0, 1)).color == BLUE

    def test_six_cycle(self):
        """C6, M={01,23,45} → すべて青の三角形"""
        g = cycle(6)
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5)]))
        assert cg.quotient.num_edges == 3
        assert cg.red_edges() == []
        assert cg.provenance == ((0, 1), (2, 3), (4, 5))
        assert cg.vertex_of((5, 4)) == 2

    def test_red_edge_example(self):
        """pr, qt, qw を追加した例 → v_pq-v_rs は赤で証拠 (p,q,r,s)"""
        g = red_example()
        p, q, r, s = 0, 1, 2, 3
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)]))

        assert cg.gm_degree[p] == 2
        assert cg.gm_degree[q] == 3
        assert cg.quotient.sorted_edges() == [(0, 1), (0, 2), (0, 3)]
        assert cg.red_edges() == [(0, 1)]
        assert cg.blue_edges() == [(0, 2), (0, 3)]

        cls = cg.edge_class((0, 1))
        assert cls.color == RED
        assert cls.witness == RedWitness(p, q, r, s)
        assert cg.verify_red_witness((0, 1), cls.witness)
        assert cg.red_anchor((0, 1)) == (p, cg.vertex_of((p, q)))

    def test_red_anchor_on_blue_edge(self):
        """青い辺の red_anchor はエラー"""
        g = red_example()
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)]))
        with pytest.raises(ValueError, match="赤ではありません"):
            cg.red_anchor((0, 2))

    def test_witness_forgery_fails(self):
        """定義を満たさない証拠は拒否される"""
        g = red_example()
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)]))
        assert not cg.verify_red_witness((0, 1), RedWitness(1, 0, 2, 3))
        assert not cg.verify_red_witness((0, 1), RedWitness(0, 1, 4, 5))

    def test_to_dict(self):
        """JSON 出力に由来と分類が含まれるか"""
        g = red_example()
        data = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)])).to_dict()
        assert data['vertices'] == [[0, 1], [2, 3], [4, 5], [6, 7]]
        assert data['edges'][0] == {'edge': [0, 1], 'pairs': [[0, 1], [2, 3]], 'color': RED, 'witness': [0, 1, 2, 3]}

    @settings(max_examples=25, deadline=None)
    @given(g=corpus_graphs, seed=st.integers(min_value=0, max_value=1000))
    def test_quotient_invariants(self, g, seed):
        """頂点数 = |M|、商グラフの辺 ⇔ 非マッチング辺、赤の証拠が再検証できる"""
        m = random_matching(g, random.Random(seed))
        cg = contract(g, m)
        assert cg.quotient.n == len(m)

        expected = set()
        for i, (a, b) in enumerate(cg.provenance):
            for j, (c, d) in enumerate(cg.provenance):
                if i < j and any(g.has_edge(x, y) for x in (a, b) for y in (c, d)):
                    expected.add((i, j))
        assert cg.quotient.edges == frozenset(expected)

        for e in cg.quotient.edges:
            cls = cg.edge_class(e)
            if cls.is_red:
                assert cg.verify_red_witness(e, cls.witness)


class TestContractedInduced:
    """contracted_induced のテストスイート"""

    def test_identity(self):
        """S = 全頂点 → 元の縮約グラフ"""
        g = red_example()
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)]))
        assert contracted_induced(cg, range(cg.quotient.n)) == cg

    def test_six_cycle_pair(self):
        """C6 の三角形から S={v01, v23} → 青い辺 1 本"""
        g = cycle(6)
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5)]))
        sub = contracted_induced(cg, [0, 1])
        assert sub.quotient.num_edges == 1
        assert sub.blue_edges() == [(0, 1)]

    def test_unknown_vertex(self):
        """存在しない縮約頂点でエラーが発生するか"""
        g = cycle(6)
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5)]))
        with pytest.raises(InvalidVertexError):
            contracted_induced(cg, [0, 7])

    def test_reclassifies_red_edge(self):
        """M' を小さくすると d_G[M'] が変わり、赤が青に変わりうる"""
        g = red_example()
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5), (6, 7)]))
        sub = contracted_induced(cg, [0, 1])
        assert sub.gm_degree[1] == 1
        assert sub.red_edges() == []

    @settings(max_examples=25, deadline=None)
    @given(g=corpus_graphs, seed=st.integers(min_value=0, max_value=1000))
    def test_equals_fresh_contraction(self, g, seed):
        """G'_M = G_{M'}（辺と分類が一致）"""
        rng = random.Random(seed)
        cg = contract(g, random_matching(g, rng))
        subset = [v for v in cg.quotient.vertices() if rng.random() < 0.6]
        sub = contracted_induced(cg, subset)
        fresh = contract(g, cg.matching.restrict(sub.provenance))
        assert sub.quotient == fresh.quotient
        assert sub.provenance == fresh.provenance
        assert sub.classification == fresh.classification
        assert sub.gm_degree == fresh.gm_degree


class TestExpandPath:
    """expand_path のテストスイート"""

    def _six_cycle(self):
        g = cycle(6)
        return contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5)]))

    def test_two_pairs(self):
        """v01, v23 → ホストの道 1,2"""
        cg = self._six_cycle()
        assert expand_path(cg, [0, 1]) == [1, 2]

    def test_single_pair(self):
        """v01 だけ → {0,1} の 1 頂点"""
        cg = self._six_cycle()
        result = expand_path(cg, [0])
        assert len(result) == 1 and result[0] in (0, 1)

    def test_three_pairs(self):
        """v01, v23, v45 → {0,1} から {4,5} への許される辺だけの道"""
        cg = self._six_cycle()
        result = expand_path(cg, [0, 1, 2])
        assert result[0] in (0, 1) and result[-1] in (4, 5)
        assert path_respects_quotient(cg, [0, 1, 2], result)

    def test_invalid_paths(self):
        """商グラフの道でなければエラー"""
        g = path(6)
        cg = contract(g, Matching.of(g, [(0, 1), (2, 3), (4, 5)]))
        with pytest.raises(ValueError, match="辺でない"):
            expand_path(cg, [0, 2])
        with pytest.raises(ValueError, match="重複"):
            expand_path(cg, [0, 1, 0])
        with pytest.raises(ValueError, match="空"):
            expand_path(cg, [])

    def test_respects_rejects_bad_path(self):
        """ペアの外の頂点や飛び越しの辺を含む道は不適合"""
        cg = self._six_cycle()
        assert not path_respects_quotient(cg, [0, 1], [1, 2, 3, 4])
        assert not path_respects_quotient(cg, [0, 1, 2], [0, 5])

    @settings(max_examples=20, deadline=None)
    @given(g=corpus_graphs, seed=st.integers(min_value=0, max_value=1000))
    def test_random_quotient_paths(self, g, seed):
        """ランダムな商グラフの道の展開が制約を満たすか"""
        rng = random.Random(seed)
        cg = contract(g, random_matching(g, rng))
        if cg.quotient.n == 0:
            return
        walk = [rng.randrange(cg.quotient.n)]
        for _ in range(6):
            options = [w for w in cg.quotient.neighbors(walk[-1]) if w not in walk]
            if not options:
                break
            walk.append(rng.choice(options))
        assert path_respects_quotient(cg, walk, expand_path(cg, walk))


class TestMatchingsFromEdgeColoring:
    """matchings_from_edge_coloring のテストスイート"""

    def test_four_cycle(self):
        """C4 の 2 辺彩色 → サイズ 2 の完全マッチング 2 つ"""
        g = cycle(4)
        f = ProperEdgeColoring(colors={(0, 1): 1, (2, 3): 1, (1, 2): 2, (0, 3): 2}, num_colors=2)
        matchings = matchings_from_edge_coloring(g, f)
        assert [len(m) for m in matchings] == [2, 2]

    def test_star(self):
        """K_{1,3} の 3 色 → 1 辺のマッチング 3 つ"""
        g = star(3)
        f = ProperEdgeColoring(colors={(0, 1): 1, (0, 2): 2, (0, 3): 3}, num_colors=3)
        assert [len(m) for m in matchings_from_edge_coloring(g, f)] == [1, 1, 1]

    def test_tightness_partition(self):
        """tightness(3) の 3 辺彩色 → 7 辺を分割する 3 つのマッチング"""
        g = tightness_graph(3)
        f = edge_color_exact(g, 3)
        matchings = matchings_from_edge_coloring(g, f)
        assert len(matchings) == 3
        covered = [e for m in matchings for e in m.edges]
        assert sorted(covered) == g.sorted_edges()

    def test_improper_coloring(self):
        """proper でない彩色でエラーが発生するか"""
        g = path(3)
        f = ProperEdgeColoring(colors={(0, 1): 1, (1, 2): 1}, num_colors=1)
        with pytest.raises(EdgeColoringError):
            matchings_from_edge_coloring(g, f)
