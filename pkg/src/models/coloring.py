"""
彩色のデータモデル

パイプラインの写像 f（proper 辺彩色）、g（頂点彩色）、h（strong 辺彩色）を表す。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.models.errors import ColoringCoverageError, EdgeColoringError
from src.models.graph import EdgePair, Graph, canonical_edge


def flatten_pair(i: int, j: int) -> int:
    """色ペア (i, j) を連番の色 3(i-1)+j に変換（j は 1..3）"""
    if i < 1 or not (1 <= j <= 3):
        raise ValueError(f"色ペアが範囲外です: {(i, j)}")
    return 3 * (i - 1) + j


def unflatten_color(color: int) -> Tuple[int, int]:
    """flatten_pair の逆変換"""
    if color < 1:
        raise ValueError(f"色は 1 以上です（現在値: {color}）")
    return ((color - 1) // 3 + 1, (color - 1) % 3 + 1)


@dataclass
class ProperEdgeColoring:
    """
    proper 辺彩色 f : E(G) → {1..k}

    method はどの経路で得た彩色かを表す。
        "exact"           : k = Δ での厳密探索が成功
        "vizing"          : 厳密探索が解なしを証明し、Vizing で Δ+1 色
        "vizing-fallback" : 厳密探索が予算超過し、Vizing にフォールバック
    """

    colors: Dict[EdgePair, int]
    num_colors: int
    method: str = "exact"

    def __post_init__(self):
        self.colors = {canonical_edge(*e): c for e, c in self.colors.items()}
        for e, c in self.colors.items():
            if not (1 <= c <= self.num_colors):
                raise EdgeColoringError(f"辺 {e} の色 {c} が 1..{self.num_colors} の範囲外です")

    def used_colors(self) -> List[int]:
        return sorted(set(self.colors.values()))

    @property
    def colors_used(self) -> int:
        return len(set(self.colors.values()))

    def violations(self, g: Graph) -> List[Tuple[EdgePair, EdgePair]]:
        """端点を共有する同色の辺ペアを列挙"""
        found = []
        for v in g.vertices():
            seen: Dict[int, EdgePair] = {}
            for w in g.neighbors(v):
                e = canonical_edge(v, w)
                c = self.colors.get(e)
                if c is None:
                    continue
                if c in seen:
                    found.append((seen[c], e))
                else:
                    seen[c] = e
        return found

    def ensure_valid(self, g: Graph) -> None:
        """
        g に対して proper かつ全辺を覆っているか検証

        例外:
            EdgeColoringError: 違反がある場合
        """
        missing = sorted(g.edges - set(self.colors))
        if missing:
            raise EdgeColoringError(f"色のない辺があります: {missing[:5]}")
        extra = sorted(set(self.colors) - g.edges)
        if extra:
            raise EdgeColoringError(f"グラフに存在しない辺に色があります: {extra[:5]}")
        bad = self.violations(g)
        if bad:
            raise EdgeColoringError(f"端点を共有する辺が同色です: {bad[0]}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'edges': [[u, v, c] for (u, v), c in sorted(self.colors.items())],
            'num_colors': self.num_colors,
            'method': self.method
        }


@dataclass
class VertexColoring:
    """頂点彩色（色は 0 始まりの小さな整数）"""

    colors: Tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


@dataclass
class StrongEdgeColoring:
    """
    strong 辺彩色 h

    colors は連番の色、pairs は補題の形 (f(e), g(e))。
    Δ ≤ 2 の経路では pairs は None。
    """

    colors: Dict[EdgePair, int]
    pairs: Optional[Dict[EdgePair, Tuple[int, int]]] = None

    def __post_init__(self):
        self.colors = {canonical_edge(*e): int(c) for e, c in self.colors.items()}
        for e, c in self.colors.items():
            if c < 1:
                raise ValueError(f"辺 {e} の色は 1 以上で指定してください（現在値: {c}）")
        if self.pairs is not None:
            self.pairs = {canonical_edge(*e): (int(p[0]), int(p[1])) for e, p in self.pairs.items()}
            if set(self.pairs) != set(self.colors):
                raise ValueError("pairs と colors の辺集合が一致しません")

    @property
    def colors_used(self) -> int:
        return len(set(self.colors.values()))

    def color_classes(self) -> Dict[int, List[EdgePair]]:
        classes: Dict[int, List[EdgePair]] = {}
        for e in sorted(self.colors):
            classes.setdefault(self.colors[e], []).append(e)
        return classes

    def ensure_covers(self, g: Graph) -> None:
        """
        全辺に色があるか検証

        例外:
            ColoringCoverageError: 色のない辺がある場合
        """
        missing = sorted(g.edges - set(self.colors))
        if missing:
            raise ColoringCoverageError(missing)

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for e in sorted(self.colors):
            pair = list(self.pairs[e]) if self.pairs is not None else None
            rows.append([e[0], e[1], pair, self.colors[e]])
        return {'edges': rows, 'colors_used': self.colors_used}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'StrongEdgeColoring':
        """
        to_dict の出力（CLI の color コマンドの JSON）から復元

        行は [u, v, color] または [u, v, color_pair, flat_color] を受け付ける。
        """
        colors: Dict[EdgePair, int] = {}
        pairs: Dict[EdgePair, Tuple[int, int]] = {}
        for row in data.get('edges', []):
            if len(row) == 3:
                u, v, c = row
                pair = None
            elif len(row) == 4:
                u, v, pair, c = row
            else:
                raise ValueError(f"彩色の行形式が不正です: {row}")
            e = canonical_edge(int(u), int(v))
            colors[e] = int(c)
            if pair is not None:
                pairs[e] = (int(pair[0]), int(pair[1]))
        return cls(colors=colors, pairs=pairs if pairs and len(pairs) == len(colors) else None)
