"""
例外クラス定義

入力エラーはすべて ValueError の派生クラスとして送出する。
探索の「解なし」「予算超過」は例外ではなく戻り値で表現する。
"""

from typing import Any, List, Optional, Tuple


class GraphFormatError(ValueError):
    """エッジリスト / JSON の解析エラー（行番号付き）"""

    def __init__(self, line_number: Optional[int], message: str):
        self.line_number = line_number
        if line_number is None:
            super().__init__(message)
        else:
            super().__init__(f"{line_number} 行目: {message}")


class InvalidVertexError(ValueError):
    """存在しない頂点 ID が指定された"""


class MatchingError(ValueError):
    """マッチングの不変条件違反"""


class EdgeColoringError(ValueError):
    """辺彩色が proper でない、または辺を覆っていない"""


class GeneratorSpecError(ValueError):
    """生成器パラメータが不正"""


class NotChordlessError(ValueError):
    """
    chordless でない入力

    witness には弦と、その両端を通る閉路（ChordWitness）が入る。
    """

    def __init__(self, witness: Any):
        self.witness = witness
        super().__init__(f"入力グラフは chordless ではありません（弦: {witness.chord}）")


class ColoringCoverageError(ValueError):
    """彩色が一部の辺に色を割り当てていない"""

    def __init__(self, missing_edges: List[Tuple[int, int]]):
        self.missing_edges = list(missing_edges)
        preview = ", ".join(f"{u}-{v}" for u, v in self.missing_edges[:5])
        super().__init__(f"色が割り当てられていない辺があります（{len(self.missing_edges)} 本: {preview}）")
