"""
性質 P の検査

(i)  G_M が 2 連結（K2 を含む）
(ii) E(G)\\M の辺 ab で a, b ∈ V(G[M]) のものは、どれも G の閉路の弦ではない
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.contraction import contract
from src.models import Graph, Matching
from src.models.errors import MatchingError
from src.structure.blocks import is_two_connected
from src.structure.cycles import ChordWitness, chord_cycle, is_chord_edge

logger = logging.getLogger(__name__)

NOT_TWO_CONNECTED = 'not-2-connected'
CHORD = 'chord'


@dataclass
class PropertyPReport:
    """
    性質 P の判定結果

    holds が False のとき、violation は 'not-2-connected' か 'chord'。
    'chord' の場合は witness に弦と閉路が入る。
    """

    holds: bool
    violation: Optional[str] = None
    witness: Optional[ChordWitness] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'violation': self.violation,
            'witness': self.witness.to_dict() if self.witness else None
        }


def check_property_P(g: Graph, m: Matching) -> PropertyPReport:
    """
    (g, m) が性質 P を満たすか検査

    パラメータ:
        g (Graph): ホストグラフ
        m (Matching): g のマッチング

    戻り値:
        PropertyPReport: 違反があれば最初に見つかった違反（辺は辞書順）

    例外:
        MatchingError: m が g のマッチングでない場合
    """
    if m.host != g:
        raise MatchingError("マッチングのホストグラフが一致しません")

    cg = contract(g, m)
    if not is_two_connected(cg.quotient):
        return PropertyPReport(holds=False, violation=NOT_TWO_CONNECTED)

    for a, b in g.sorted_edges():
        if (a, b) in m.edges or not (m.covers(a) and m.covers(b)):
            continue
        if is_chord_edge(g, (a, b)):
            witness = ChordWitness(chord=(a, b), cycle=chord_cycle(g, (a, b)))
            logger.debug("性質 P 違反（弦）: %s", witness)
            return PropertyPReport(holds=False, violation=CHORD, witness=witness)

    return PropertyPReport(holds=True)
