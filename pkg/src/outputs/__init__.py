"""
出力モジュール

レポートのテキスト・Graphviz DOT への変換を担当
"""

from .report_renderer import ReportRenderer

__all__ = ['ReportRenderer']
