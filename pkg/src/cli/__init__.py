"""
CLI モジュール

サブコマンドの実装と実行設定
"""

from .commands import (
    EXIT_COVERAGE, EXIT_FALSE, EXIT_IO_ERROR, EXIT_OK, EXIT_PARTIAL, EXIT_REFUSED,
    build_parser, cmd_audit, cmd_color, cmd_generate, cmd_oracle, cmd_recognize, cmd_verify,
    execute, log_level, recognize_report, run
)
from .run_config import RunConfig, default_log_level, parse_base_spec, parse_generator_spec

__all__ = [
    'RunConfig', 'parse_base_spec', 'parse_generator_spec', 'default_log_level',
    'build_parser', 'execute', 'run', 'log_level', 'recognize_report',
    'cmd_recognize', 'cmd_color', 'cmd_verify', 'cmd_oracle', 'cmd_audit', 'cmd_generate',
    'EXIT_OK', 'EXIT_FALSE', 'EXIT_REFUSED', 'EXIT_IO_ERROR', 'EXIT_COVERAGE', 'EXIT_PARTIAL',
]
