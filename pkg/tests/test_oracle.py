"""
χ'_s オラクルのユニットテスト
"""

import os
from unittest.mock import patch

import pytest

from src.coloring import default_oracle_cap, exact_chi_s, tightness_audit, verify_strong
from src.coloring.oracle import DEFAULT_ORACLE_CAP, EDGE_CAP_EXCEEDED, OPTIMAL, edge_star_bound
from src.data_sources import tightness_graph
from src.models import Graph
from tests.conftest import cycle, path


class TestExactChiS:
    """exact_chi_s のテストスイート"""

    @pytest.mark.parametrize("g,expected", [
        (cycle(5), 5),
        (cycle(6), 3),
        (cycle(7), 4),
        (path(4), 3),
        (tightness_graph(3), 7),
    ])
    def test_known_values(self, g, expected):
        """既知の χ'_s"""
        result = exact_chi_s(g)
        assert result.status == OPTIMAL
        assert result.value == expected
        assert verify_strong(g, result.coloring)

    def test_edgeless(self):
        """辺がなければ 0"""
        assert exact_chi_s(Graph(n=2, edges=frozenset())).value == 0

    def test_edge_cap(self):
        """辺数上限を超えたら上下界だけ"""
        result = exact_chi_s(cycle(5), cap=3)
        assert result.status == EDGE_CAP_EXCEEDED
        assert result.value is None
        assert result.lower == 3
        assert result.lower <= 5 <= result.upper
        assert verify_strong(cycle(5), result.coloring)

    def test_to_dict_excludes_timing(self):
        """既定では経過時間を出力しない"""
        result = exact_chi_s(path(4))
        assert 'elapsed' not in result.to_dict()
        assert 'elapsed' in result.to_dict(include_timing=True)

    def test_edge_star_bound(self):
        """辺 uv の下界 d(u)+d(v)-1"""
        assert edge_star_bound(tightness_graph(3)) == 5


class TestTightnessAudit:
    """tightness_audit のテストスイート"""

    @pytest.mark.parametrize("delta", [2, 3, 4])
    def test_with_oracle(self, delta):
        """Δ = 2..4 はオラクルでも χ'_s = 3Δ-2"""
        report = tightness_audit(delta)
        assert report.holds
        assert report.oracle.value == 3 * delta - 2

    @pytest.mark.parametrize("delta", [5, 6])
    def test_conflict_graph_is_complete(self, delta):
        """衝突グラフが K_{3Δ-2}"""
        report = tightness_audit(delta)
        assert report.oracle is None
        assert report.conflict_complete
        assert report.to_dict()['holds']


class TestDefaultOracleCap:
    """オラクルの辺数上限の環境変数のテストスイート"""

    def test_default(self):
        """未設定なら 30"""
        with patch.dict(os.environ, {}, clear=True):
            assert default_oracle_cap() == DEFAULT_ORACLE_CAP == 30

    def test_override(self):
        """環境変数で上書き、不正値は既定値"""
        with patch.dict(os.environ, {'STRONG_COLOR_ORACLE_CAP': '12'}):
            assert default_oracle_cap() == 12
        with patch.dict(os.environ, {'STRONG_COLOR_ORACLE_CAP': 'x'}):
            assert default_oracle_cap() == DEFAULT_ORACLE_CAP
