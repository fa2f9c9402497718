"""
閉路・弦・局所 2 連結性のユニットテスト
"""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.data_sources import GeneratorSpec, full_subdivision, generate, tightness_graph
from src.models import Graph
from src.structure import (
    edge_removal_report, in_common_cycle, in_common_cycle_by_flow, is_chord_edge, is_chordless,
    is_minimally_2connected, menger_pair
)
from tests.conftest import complete, cycle, path, two_triangles


class TestInCommonCycle:
    """in_common_cycle のテストスイート"""

    def test_cycle(self):
        """C5, a=0, b=2 → True"""
        assert in_common_cycle(cycle(5), 0, 2).holds

    def test_path_separator(self):
        """道 0-1-2, a=0, b=2 → False、分離頂点 1"""
        answer = in_common_cycle(path(3), 0, 2)
        assert not answer
        assert answer.separator == 1

    def test_two_triangles_separator(self):
        """別々の三角形の頂点 → False、分離頂点 v"""
        answer = in_common_cycle(two_triangles(), 0, 3)
        assert not answer.holds
        assert answer.separator == 2

    def test_disconnected(self):
        """非連結の頂点"""
        answer = in_common_cycle(Graph.from_edges([(0, 1), (2, 3)]), 0, 3)
        assert not answer.holds
        assert answer.disconnected

    def test_adjacent_vertices(self):
        """ab ∈ E のときは分離頂点を返さない"""
        answer = in_common_cycle(path(2), 0, 1)
        assert not answer.holds
        assert answer.separator is None
        assert in_common_cycle(cycle(4), 0, 1).holds

    def test_same_vertex(self):
        """a == b でエラーが発生するか"""
        with pytest.raises(ValueError, match="異なる頂点"):
            in_common_cycle(cycle(5), 1, 1)

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=3, max_value=10))
    def test_agrees_with_flow(self, seed, n):
        """ブロック分解による判定がフローによる判定と一致するか"""
        g = generate(GeneratorSpec(family='tree-ears', n=n, ears=2, seed=seed))
        for a in g.vertices():
            for b in range(a + 1, g.n):
                assert in_common_cycle(g, a, b).holds == in_common_cycle_by_flow(g, a, b)


class TestChords:
    """is_chord_edge / is_chordless のテストスイート"""

    def test_k4_every_edge_is_chord(self):
        """K4 の辺はすべて弦"""
        g = complete(4)
        assert all(is_chord_edge(g, e) for e in g.edges)

    def test_cycle_has_no_chord(self):
        """C5 の辺は弦ではない"""
        g = cycle(5)
        assert not any(is_chord_edge(g, e) for e in g.edges)

    def test_tightness_has_no_chord(self):
        """tightness(3) の辺はどれも弦ではない"""
        g = tightness_graph(3)
        assert not any(is_chord_edge(g, e) for e in g.edges)
        assert is_chordless(g).chordless

    def test_chord_edge_must_exist(self):
        """存在しない辺でエラーが発生するか"""
        with pytest.raises(ValueError, match="存在しません"):
            is_chord_edge(cycle(5), (0, 2))

    def test_k4_witness(self):
        """K4 → False、検証できる弦の証拠"""
        g = complete(4)
        report = is_chordless(g)
        assert not report.chordless
        assert report.witness.verify(g)
        assert len(report.witness.cycle) >= 4

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_full_subdivision_is_chordless(self, k):
        """完全細分は chordless"""
        assert is_chordless(full_subdivision(complete(k))).chordless

    def test_wheel_is_rejected(self):
        """6 頂点の車輪は chordless でない"""
        g = Graph.from_networkx(nx.wheel_graph(6))
        report = is_chordless(g)
        assert not report.chordless
        assert report.witness.verify(g)

    def test_witness_verify_rejects_forgery(self):
        """偽の証拠は検証に失敗する"""
        from src.structure import ChordWitness
        g = complete(4)
        assert not ChordWitness(chord=(0, 1), cycle=[0, 1, 2]).verify(g)
        assert not ChordWitness(chord=(0, 2), cycle=[0, 1, 3]).verify(g)


class TestMinimallyTwoConnected:
    """is_minimally_2connected のテストスイート"""

    def test_examples(self):
        """C5 → True、K4 → False、tightness(3) → False"""
        assert is_minimally_2connected(cycle(5))
        assert not is_minimally_2connected(complete(4))
        assert not is_minimally_2connected(tightness_graph(3))

    def test_full_subdivision(self):
        """K4 の完全細分は極小 2 連結"""
        assert is_minimally_2connected(full_subdivision(complete(4)))


class TestMengerPair:
    """menger_pair のテストスイート"""

    def test_cycle_arcs(self):
        """C5, x=0, y=2, z=3 → 0,1,2 と 0,4,3"""
        pair = menger_pair(cycle(5), 0, 2, 3)
        assert pair.p1 == [0, 1, 2]
        assert pair.p2 == [0, 4, 3]
        assert pair.verify(cycle(5), 2, 3)

    def test_degenerate(self):
        """C5, x=0, y=0, z=1 → {0} と 0,1"""
        pair = menger_pair(cycle(5), 0, 0, 1)
        assert pair.p1 == [0]
        assert pair.p2 == [0, 1]

    def test_k4(self):
        """K4, x=0, y=1, z=2 → 0,1 と 0,2"""
        pair = menger_pair(complete(4), 0, 1, 2)
        assert pair.p1 == [0, 1]
        assert pair.p2 == [0, 2]

    def test_subdivision_pairs(self):
        """完全細分の全三つ組で道の組が検証を通るか"""
        g = full_subdivision(complete(4))
        for x in range(0, g.n, 3):
            for y in g.vertices():
                for z in range(y + 1, g.n):
                    assert menger_pair(g, x, y, z).verify(g, y, z)

    def test_errors(self):
        """2 連結でない、または y == z でエラー"""
        with pytest.raises(ValueError, match="2 連結"):
            menger_pair(path(4), 0, 1, 2)
        with pytest.raises(ValueError, match="異なる頂点"):
            menger_pair(cycle(5), 0, 2, 2)


class TestEdgeRemoval:
    """edge_removal_report のテストスイート"""

    def test_cycle_edge(self):
        """C6 - 01 は道で、性質がすべて成り立つ"""
        report = edge_removal_report(cycle(6), (0, 1))
        assert report.holds
        assert report.leafblock_count == 2
        assert report.endpoints_in_distinct_leafblocks

    def test_single_edge(self):
        """K2 は単一辺の例外として扱う"""
        report = edge_removal_report(path(2), (0, 1))
        assert report.single_edge
        assert report.holds

    def test_minimally_two_connected_edges(self):
        """極小 2 連結グラフのすべての辺で成り立つ"""
        g = full_subdivision(complete(4))
        for e in g.sorted_edges():
            assert edge_removal_report(g, e).holds

    def test_precondition(self):
        """G - e が 2 連結なら前提違反"""
        with pytest.raises(ValueError, match="前提"):
            edge_removal_report(complete(4), (0, 1))
        with pytest.raises(ValueError, match="2 連結"):
            edge_removal_report(path(4), (0, 1))
