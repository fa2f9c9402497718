"""
EdgeListSource のユニットテスト
"""

import json

import pytest

from src.data_sources import EdgeListSource, load_edge_list, serialize_edge_list
from src.models import Graph
from src.models.errors import GraphFormatError
from tests.conftest import cycle


class TestEdgeListSource:
    """EdgeListSource クラスのテストスイート"""

    def test_parse_two_edge_path(self):
        """'0 1\\n1 2' → 3 頂点 2 辺、次数 (1,2,1)"""
        g = load_edge_list("0 1\n1 2")
        assert g.n == 3
        assert g.num_edges == 2
        assert [g.degree(v) for v in g.vertices()] == [1, 2, 1]

    def test_duplicate_warning_reports_lines(self, caplog):
        """重複の警告に辺の行数も出る"""
        with caplog.at_level('WARNING', logger='src.data_sources.edge_list_source'):
            EdgeListSource().parse("# comment\n0 1\n1 0\n1 2")
        assert "重複した辺を 1 本まとめました（辺の行 3 行）" in caplog.text

    def test_duplicate_edges_collapse(self):
        """'a b\\nb a' → 2 頂点 1 辺、重複数 1"""
        source = EdgeListSource()
        g = source.parse("a b\nb a")
        assert g.n == 2
        assert g.num_edges == 1
        assert source.duplicate_count == 1
        assert source.line_count == 2
        assert g.labels == ('a', 'b')

    def test_self_loop_rejected(self):
        """自己ループで行番号付きのエラーが発生するか"""
        with pytest.raises(GraphFormatError, match="1 行目") as excinfo:
            load_edge_list("0 0")
        assert excinfo.value.line_number == 1

    def test_malformed_line(self):
        """トークン数が 2 でない行で行番号付きのエラーが発生するか"""
        with pytest.raises(GraphFormatError, match="3 行目"):
            load_edge_list("0 1\n# comment\n1 2 3")

    def test_comments_and_blank_lines(self):
        """コメント行と空行を無視するか"""
        g = load_edge_list("# header\n\n0 1\n   \n1 2\n")
        assert g.num_edges == 2

    def test_first_seen_order(self):
        """トークンの初出順に ID を割り当てるか"""
        g = load_edge_list("x y\nz x")
        assert g.labels == ('x', 'y', 'z')
        assert g.sorted_edges() == [(0, 1), (0, 2)]

    def test_bytes_input(self):
        """bytes を受け付け、UTF-8 でなければエラー"""
        assert load_edge_list(b"0 1").num_edges == 1
        with pytest.raises(GraphFormatError, match="UTF-8"):
            load_edge_list(b"\xff\xfe 1")

    def test_round_trip_keeps_isolated_vertices(self):
        """読み込み → 出力 → 読み込みで同一のグラフになるか（孤立点を含む）"""
        g = load_edge_list("# vertices: a b c d\nb a\nc b\n")
        assert g.n == 4
        text = serialize_edge_list(g)
        assert text.splitlines()[0] == "# vertices: a b c d"
        assert load_edge_list(text) == g

    def test_serialize_is_sorted(self):
        """正規形の辺を辞書順に出力するか"""
        text = serialize_edge_list(cycle(4))
        assert text.splitlines()[1:] == ["0 1", "0 3", "1 2", "2 3"]

    def test_serialize_rejects_whitespace_labels(self):
        """空白を含むラベルは出力できない"""
        g = Graph.from_edges([(0, 1)], labels=['a b', 'c'])
        with pytest.raises(ValueError, match="出力できない"):
            serialize_edge_list(g)

    def test_parse_json(self):
        """JSON エクスポートを読み込めるか"""
        g = cycle(5)
        assert EdgeListSource.parse_json(EdgeListSource.to_json(g)) == g
        with pytest.raises(GraphFormatError, match="JSON"):
            EdgeListSource.parse_json("{not json")
        with pytest.raises(GraphFormatError, match="形式が不正"):
            EdgeListSource.parse_json(json.dumps({'edges': [[0, 1]]}))

    def test_load_file(self, tmp_path):
        """拡張子で形式を切り替えるか"""
        text_file = tmp_path / "c5.txt"
        text_file.write_text("0 1\n1 2\n2 3\n3 4\n4 0\n", encoding='utf-8')
        json_file = tmp_path / "c5.json"
        json_file.write_text(EdgeListSource.to_json(cycle(5)), encoding='utf-8')

        source = EdgeListSource()
        from_text = source.load_file(text_file)
        from_json = source.load_file(json_file)
        assert from_text.num_edges == from_json.num_edges == 5

    def test_load_missing_file(self, tmp_path):
        """存在しないファイルで OSError が発生するか"""
        with pytest.raises(OSError):
            EdgeListSource().load_file(tmp_path / "missing.txt")
