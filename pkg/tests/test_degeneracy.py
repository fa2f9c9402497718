"""
縮退順序と貪欲頂点彩色のユニットテスト
"""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.coloring import DegeneracyFailure, DegeneracyOrdering, degeneracy_ordering, greedy_color, min_degree_witness
from src.data_sources import random_tree
from src.models import Graph
from tests.conftest import complete, cycle, path


class TestDegeneracyOrdering:
    """degeneracy_ordering のテストスイート"""

    def test_cycle_is_two_degenerate(self):
        """C5, k=2 → 成功"""
        result = degeneracy_ordering(cycle(5), 2)
        assert isinstance(result, DegeneracyOrdering)
        assert result.is_valid_for(cycle(5))

    def test_k4_fails(self):
        """K4, k=2 → 4 頂点すべてのコア、最小次数 3"""
        g = complete(4)
        result = degeneracy_ordering(g, 2)
        assert isinstance(result, DegeneracyFailure)
        assert result.core == frozenset(range(4))
        assert result.min_degree == 3
        assert result.verify(g)

    def test_tree_is_one_degenerate(self):
        """木は 1-縮退"""
        g = random_tree(20, seed=3)
        result = degeneracy_ordering(g, 1)
        assert isinstance(result, DegeneracyOrdering)
        assert result.is_valid_for(g)

    def test_ties_broken_by_id(self):
        """同次数なら ID 最小から剥離"""
        assert degeneracy_ordering(path(4), 1).ordering == (0, 1, 2, 3)

    def test_negative_k(self):
        """k < 0 でエラーが発生するか"""
        with pytest.raises(ValueError, match="0 以上"):
            degeneracy_ordering(cycle(5), -1)
        with pytest.raises(ValueError):
            DegeneracyOrdering(ordering=(0,), k=-1)

    def test_failure_witness_rejects_empty_core(self):
        """空のコアは証拠にならない"""
        assert not DegeneracyFailure(core=frozenset(), k=1, min_degree=0).verify(cycle(5))

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=2, max_value=14))
    def test_matches_core_number(self, seed, n):
        """縮退度が networkx のコア数の最大値と一致するか"""
        nxg = nx.gnp_random_graph(n, 0.4, seed=seed)
        g = Graph.from_networkx(nxg)
        d = max(nx.core_number(nxg).values(), default=0)
        assert isinstance(degeneracy_ordering(g, d), DegeneracyOrdering)
        if d > 0:
            failure = degeneracy_ordering(g, d - 1)
            assert isinstance(failure, DegeneracyFailure)
            assert failure.verify(g)


class TestGreedyColor:
    """greedy_color のテストスイート"""

    def test_cycle(self):
        """C5 は 3 色以下"""
        g = cycle(5)
        coloring = greedy_color(g, degeneracy_ordering(g, 2))
        assert coloring.is_proper(g)
        assert coloring.colors_used <= 3

    def test_edgeless(self):
        """辺のないグラフは 1 色"""
        g = Graph(n=3, edges=frozenset())
        assert greedy_color(g, [0, 1, 2]).colors_used == 1

    def test_triangle(self):
        """三角形はちょうど 3 色"""
        g = complete(3)
        assert greedy_color(g, degeneracy_ordering(g, 2)).colors_used == 3

    def test_reverse_order(self):
        """順序の末尾から彩色する（P4 を 3,2,1,0 の順に塗る）"""
        coloring = greedy_color(path(4), [0, 1, 2, 3])
        assert coloring.colors == (1, 0, 1, 0)

    def test_not_a_permutation(self):
        """順序が置換でなければエラー"""
        with pytest.raises(ValueError, match="置換"):
            greedy_color(cycle(4), [0, 1, 1, 2])

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=1, max_value=14))
    def test_uses_at_most_k_plus_one(self, seed, n):
        """k-縮退順序の貪欲彩色は k+1 色以下"""
        g = Graph.from_networkx(nx.gnp_random_graph(n, 0.35, seed=seed))
        k = max(nx.core_number(g.to_networkx()).values(), default=0)
        coloring = greedy_color(g, degeneracy_ordering(g, k))
        assert coloring.is_proper(g)
        assert coloring.colors_used <= k + 1


class TestMinDegreeWitness:
    """min_degree_witness のテストスイート"""

    def test_examples(self):
        """C5 → 全頂点、K4 → なし、道 → 全頂点と次数"""
        assert [v for v, _ in min_degree_witness(cycle(5))] == [0, 1, 2, 3, 4]
        assert min_degree_witness(complete(4)) == []
        assert min_degree_witness(path(4)) == [(0, 1), (1, 2), (2, 2), (3, 1)]
