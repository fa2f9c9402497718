"""
エッジリスト / JSON からグラフを読み込むモジュール

エッジリスト形式:
    1 行 1 辺、空白区切りの 2 トークン。'#' で始まる行はコメント。
    '# vertices: t0 t1 ...' 行は頂点トークンの ID 順を宣言する（シリアライザが出力する）。
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from src.models import Graph
from src.models.errors import GraphFormatError
from src.models.graph import canonical_edge

logger = logging.getLogger(__name__)

VERTICES_DIRECTIVE = '# vertices:'


class EdgeListSource:
    """
    エッジリストテキストを Graph に変換するクラス

    辺の行数を line_count に、重複した辺は 1 本にまとめてその数を duplicate_count に記録する。
    """

    def __init__(self):
        self.duplicate_count = 0
        self.line_count = 0

    def parse(self, text: Union[str, bytes]) -> Graph:
        """
        エッジリストを解析

        パラメータ:
            text (str | bytes): エッジリスト本文

        戻り値:
            Graph: トークンの初出順に 0..n-1 を割り当てた単純グラフ

        例外:
            GraphFormatError: 行の形式が不正、または自己ループの場合（行番号付き）
        """
        if isinstance(text, bytes):
            try:
                text = text.decode('utf-8')
            except UnicodeDecodeError as e:
                raise GraphFormatError(None, f"UTF-8 として読めません: {e}") from e

        ids: Dict[str, int] = {}
        tokens: List[str] = []
        edges = set()
        self.duplicate_count = 0
        self.line_count = 0

        def vertex_id(token: str) -> int:
            if token not in ids:
                ids[token] = len(tokens)
                tokens.append(token)
            return ids[token]

        for line_number, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith('#'):
                if line.startswith(VERTICES_DIRECTIVE):
                    for token in line[len(VERTICES_DIRECTIVE):].split():
                        vertex_id(token)
                continue

            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(line_number, f"頂点トークンが 2 つ必要です（{len(parts)} 個: '{line}'）")
            a, b = parts
            if a == b:
                raise GraphFormatError(line_number, f"自己ループは許可されていません（'{line}'）")

            edge = canonical_edge(vertex_id(a), vertex_id(b))
            if edge in edges:
                self.duplicate_count += 1
            edges.add(edge)
            self.line_count += 1

        if self.duplicate_count:
            logger.warning("⚠️ 重複した辺を %d 本まとめました（辺の行 %d 行）", self.duplicate_count, self.line_count)

        return Graph(n=len(tokens), edges=frozenset(edges), labels=tuple(tokens))

    @staticmethod
    def parse_json(text: Union[str, bytes]) -> Graph:
        """
        JSON エクスポート {n, edges, labels} を解析

        例外:
            GraphFormatError: JSON として不正、または必須キーがない場合
        """
        try:
            data = json.loads(text)
            return Graph.from_dict(data)
        except json.JSONDecodeError as e:
            raise GraphFormatError(e.lineno, f"JSON の解析に失敗しました: {e.msg}") from e
        except (KeyError, TypeError, ValueError) as e:
            raise GraphFormatError(None, f"グラフ JSON の形式が不正です: {e}") from e

    def load_file(self, path: Union[str, Path]) -> Graph:
        """
        ファイルから読み込む（拡張子 .json なら JSON、それ以外はエッジリスト）

        例外:
            OSError: ファイルが読めない場合
            GraphFormatError: 形式が不正な場合
        """
        path = Path(path)
        logger.info("📡 グラフを読み込み中: %s", path)
        data = path.read_bytes()
        if path.suffix.lower() == '.json':
            graph = self.parse_json(data)
        else:
            graph = self.parse(data)
        logger.info("✅ %s: 頂点 %d / 辺 %d", path.name, graph.n, graph.num_edges)
        return graph

    @staticmethod
    def serialize(g: Graph) -> str:
        """
        正規形の辺を辞書順に出力

        先頭に '# vertices:' 行を置くので、読み直すと同一のグラフになる。
        """
        tokens = [g.label(v) for v in g.vertices()]
        for token in tokens:
            if not token or any(c.isspace() for c in token) or token.startswith('#'):
                raise ValueError(f"エッジリストに出力できないラベルです: '{token}'")

        lines = [f"{VERTICES_DIRECTIVE} {' '.join(tokens)}".rstrip()]
        lines.extend(f"{tokens[u]} {tokens[v]}" for u, v in g.sorted_edges())
        return '\n'.join(lines) + '\n'

    @staticmethod
    def to_json(g: Graph, indent: Optional[int] = 2) -> str:
        return json.dumps(g.to_dict(), ensure_ascii=False, indent=indent, sort_keys=True)


def load_edge_list(text: Union[str, bytes]) -> Graph:
    """エッジリストを解析する便利関数"""
    return EdgeListSource().parse(text)


def serialize_edge_list(g: Graph) -> str:
    return EdgeListSource.serialize(g)
