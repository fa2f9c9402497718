"""
Graph / Matching / 彩色モデルのユニットテスト
"""

import networkx as nx
import pytest

from src.models import (
    Graph, Matching, ProperEdgeColoring, StrongEdgeColoring, VertexColoring,
    canonical_edge, flatten_pair, induced_subgraph, max_degree, unflatten_color
)
from src.models.errors import ColoringCoverageError, EdgeColoringError, InvalidVertexError, MatchingError
from tests.conftest import complete, cycle, path, star


class TestGraph:
    """Graph クラスのテストスイート"""

    def test_canonical_edge(self):
        """辺が (min, max) に正規化されるか"""
        assert canonical_edge(3, 1) == (1, 3)
        assert canonical_edge(1, 3) == (1, 3)

    def test_self_loop_rejected(self):
        """自己ループでエラーが発生するか"""
        with pytest.raises(ValueError, match="自己ループ"):
            canonical_edge(2, 2)
        with pytest.raises(ValueError, match="自己ループ"):
            Graph.from_edges([(0, 0)])

    def test_vertex_out_of_range(self):
        """範囲外の頂点でエラーが発生するか"""
        with pytest.raises(InvalidVertexError, match="範囲外"):
            Graph(n=2, edges=frozenset({(0, 5)}))

    def test_adjacency_is_symmetric(self):
        """隣接が対称で次数の和が辺数の 2 倍か"""
        g = Graph.from_edges([(2, 0), (0, 1), (1, 2), (2, 3)])
        for u in g.vertices():
            for w in g.neighbors(u):
                assert u in g.neighbors(w)
                assert canonical_edge(u, w) in g.edges
        assert sum(g.degree(v) for v in g.vertices()) == 2 * g.num_edges

    def test_edges_are_canonical(self):
        """逆向きの重複辺が 1 本になるか"""
        g = Graph(n=2, edges=frozenset({(1, 0), (0, 1)}))
        assert g.edges == frozenset({(0, 1)})

    def test_max_degree(self):
        """C5 → 2、4 葉のスター → 4、辺なし → 0"""
        assert max_degree(cycle(5)) == 2
        assert max_degree(star(4)) == 4
        assert max_degree(Graph(n=3, edges=frozenset())) == 0

    def test_labels(self):
        """ラベルの長さが n と一致しない場合にエラーが発生するか"""
        g = Graph.from_edges([(0, 1)], labels=['a', 'b'])
        assert g.label(1) == 'b'
        assert cycle(3).label(2) == '2'
        with pytest.raises(ValueError, match="labels の長さ"):
            Graph.from_edges([(0, 1)], labels=['a'])

    def test_without_and_with_edge(self):
        """辺の削除と追加"""
        g = cycle(4)
        h = g.without_edge((3, 0))
        assert h.num_edges == 3
        assert not h.has_edge(0, 3)
        assert h.with_edge((0, 3)) == g
        with pytest.raises(ValueError, match="存在しません"):
            h.without_edge((0, 3))

    def test_networkx_conversion(self):
        """networkx との相互変換"""
        nx_graph = nx.Graph([('b', 'a'), ('a', 'c')])
        g = Graph.from_networkx(nx_graph)
        assert g.labels == ('a', 'b', 'c')
        assert g.sorted_edges() == [(0, 1), (0, 2)]
        assert nx.is_isomorphic(g.to_networkx(), nx_graph)

    def test_dict_round_trip(self):
        """to_dict / from_dict で同じグラフに戻るか"""
        g = Graph.from_edges([(0, 1), (1, 2)], n=4, labels=['a', 'b', 'c', 'd'])
        assert Graph.from_dict(g.to_dict()) == g


class TestInducedSubgraph:
    """induced_subgraph のテストスイート"""

    def test_path_from_cycle(self):
        """(C5, {0,1,2}) → 3 頂点の道"""
        view = induced_subgraph(cycle(5), {0, 1, 2})
        assert view.graph.n == 3
        assert view.original_edges() == [(0, 1), (1, 2)]

    def test_full_vertex_set(self):
        """全頂点で元のグラフと同じになり、繰り返しても変わらないか"""
        g = complete(4)
        view = induced_subgraph(g, g.vertices())
        assert view.graph == g
        again = induced_subgraph(view.graph, view.graph.vertices())
        assert again.graph == view.graph

    def test_single_edge(self):
        """(K4, {0,1}) → 1 本の辺"""
        view = induced_subgraph(complete(4), {0, 1})
        assert view.graph.num_edges == 1

    def test_id_mapping(self):
        """ID 対応表"""
        view = induced_subgraph(path(5), {4, 2, 3})
        assert view.original_ids == (2, 3, 4)
        assert view.to_local(4) == 2
        assert view.to_original(0) == 2
        with pytest.raises(InvalidVertexError):
            view.to_local(0)

    def test_unknown_vertex(self):
        """存在しない頂点でエラーが発生するか"""
        with pytest.raises(InvalidVertexError):
            induced_subgraph(cycle(5), {0, 9})


class TestMatching:
    """Matching クラスのテストスイート"""

    def test_valid_matching(self):
        """相手の頂点と端点の一覧"""
        m = Matching.of(cycle(6), [(1, 0), (2, 3)])
        assert m.sorted_edges() == [(0, 1), (2, 3)]
        assert m.partner(3) == 2
        assert m.endpoints() == [0, 1, 2, 3]
        assert m.covers(0) and not m.covers(4)

    def test_shared_endpoint_rejected(self):
        """端点を共有する辺でエラーが発生するか"""
        with pytest.raises(MatchingError, match="複数のマッチング辺"):
            Matching.of(cycle(6), [(0, 1), (1, 2)])

    def test_non_edge_rejected(self):
        """ホストにない辺でエラーが発生するか"""
        with pytest.raises(MatchingError, match="存在しません"):
            Matching.of(cycle(6), [(0, 3)])

    def test_restrict(self):
        """部分マッチング"""
        m = Matching.of(cycle(6), [(0, 1), (2, 3), (4, 5)])
        assert len(m.restrict([(2, 3)])) == 1
        with pytest.raises(MatchingError, match="M に含まれない"):
            m.restrict([(1, 2)])


class TestColorings:
    """彩色モデルのテストスイート"""

    def test_flatten_pair(self):
        """(i, j) ↔ 3(i-1)+j"""
        assert flatten_pair(1, 1) == 1
        assert flatten_pair(2, 3) == 6
        assert unflatten_color(7) == (3, 1)
        with pytest.raises(ValueError, match="範囲外"):
            flatten_pair(1, 4)

    def test_proper_edge_coloring_validation(self):
        """端点を共有する同色辺を検出するか"""
        g = path(3)
        good = ProperEdgeColoring(colors={(0, 1): 1, (1, 2): 2}, num_colors=2)
        good.ensure_valid(g)
        assert good.used_colors() == [1, 2]

        bad = ProperEdgeColoring(colors={(0, 1): 1, (2, 1): 1}, num_colors=2)
        assert bad.violations(g) == [((0, 1), (1, 2))]
        with pytest.raises(EdgeColoringError, match="同色"):
            bad.ensure_valid(g)

    def test_proper_edge_coloring_range(self):
        """色が 1..k の範囲外でエラーが発生するか"""
        with pytest.raises(EdgeColoringError, match="範囲外"):
            ProperEdgeColoring(colors={(0, 1): 3}, num_colors=2)

    def test_vertex_coloring(self):
        """proper 判定"""
        assert VertexColoring(colors=(0, 1, 0)).is_proper(path(3))
        assert not VertexColoring(colors=(0, 0, 1)).is_proper(path(3))

    def test_strong_coloring_from_dict(self):
        """3 列・4 列の行形式を受け付けるか"""
        plain = StrongEdgeColoring.from_dict({'edges': [[1, 0, 2], [1, 2, 1]]})
        assert plain.colors == {(0, 1): 2, (1, 2): 1}
        assert plain.pairs is None

        paired = StrongEdgeColoring(colors={(0, 1): 4}, pairs={(0, 1): (2, 1)})
        restored = StrongEdgeColoring.from_dict(paired.to_dict())
        assert restored.colors == paired.colors
        assert restored.pairs == paired.pairs

    def test_strong_coloring_coverage(self):
        """色のない辺で ColoringCoverageError が発生するか"""
        c = StrongEdgeColoring(colors={(0, 1): 1})
        with pytest.raises(ColoringCoverageError) as excinfo:
            c.ensure_covers(path(3))
        assert excinfo.value.missing_edges == [(1, 2)]
