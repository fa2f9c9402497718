"""
監査モジュール

chordless コーパスを生成し、構造補題と彩色パイプラインの性質を一括で検査する。
"""

from .corpus import CorpusEntry, CorpusSpec, build_corpus, random_matching, random_submatching
from .lemma_audit import CHECKS, AuditReport, CheckResult, LemmaAuditor, run_audit

__all__ = [
    'CorpusSpec', 'CorpusEntry', 'build_corpus', 'random_matching', 'random_submatching',
    'CHECKS', 'CheckResult', 'AuditReport', 'LemmaAuditor', 'run_audit',
]
