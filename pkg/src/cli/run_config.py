"""
CLI の実行設定

コマンドライン引数と環境変数から RunConfig を組み立てる。
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.coloring.edge_coloring import default_budget_nodes
from src.coloring.oracle import default_oracle_cap
from src.data_sources.generators import FAMILIES, GeneratorSpec, generate
from src.models import Graph
from src.models.errors import GeneratorSpecError

logger = logging.getLogger(__name__)

COMMANDS = ('recognize', 'color', 'verify', 'oracle', 'audit', 'generate')
FORMATS = ('json', 'text')

# グラフの入力が必要なコマンド
GRAPH_COMMANDS = ('recognize', 'color', 'verify', 'oracle')

DEFAULT_AUDIT_SEED = 7
DEFAULT_AUDIT_COUNT = 200


def default_log_level() -> str:
    """ログレベル（環境変数 STRONG_COLOR_LOG_LEVEL、既定 WARNING）"""
    return os.getenv('STRONG_COLOR_LOG_LEVEL', 'WARNING').upper()


def parse_base_spec(text: str, seed: int = 0) -> Graph:
    """
    full-subdivision の元グラフ指定 'family:size' をグラフに変換

    size は tightness / star では Δ、それ以外では n として扱う。

    【使用例】
    parse_base_spec('complete:4')   # K4

    例外:
        GeneratorSpecError: 形式が不正な場合
    """
    family, sep, size = text.partition(':')
    if not sep or family == 'full-subdivision':
        raise GeneratorSpecError(f"base は 'family:size' 形式で指定してください（例: complete:4）: '{text}'")
    try:
        value = int(size)
    except ValueError as e:
        raise GeneratorSpecError(f"base の size は整数で指定してください: '{size}'") from e
    key = 'delta' if family in ('tightness', 'star') else 'n'
    return generate(GeneratorSpec(family=family, seed=seed, **{key: value}))


def parse_generator_spec(text: str, seed: int = 0) -> GeneratorSpec:
    """
    インライン指定を GeneratorSpec に変換

    パラメータ:
        text (str): 'family=tightness delta=5' 形式（',' 区切りも可、Δ は delta の別名、
            full-subdivision の元グラフは base=complete:4 のように指定）
        seed (int): 文字列に seed がない場合のシード

    戻り値:
        GeneratorSpec: 検証済みの指定

    例外:
        GeneratorSpecError: 形式が不正な場合
    """
    fields = {'seed': seed}
    for token in text.replace(',', ' ').split():
        if '=' not in token:
            raise GeneratorSpecError(f"key=value 形式で指定してください: '{token}'")
        key, value = token.split('=', 1)
        key = {'Δ': 'delta', 'd': 'delta'}.get(key.strip(), key.strip())
        if key == 'family':
            fields['family'] = value
        elif key == 'base':
            fields['base'] = value
        elif key in ('n', 'delta', 'seed', 'm', 'ears'):
            try:
                fields[key] = int(value)
            except ValueError as e:
                raise GeneratorSpecError(f"{key} は整数で指定してください: '{value}'") from e
        else:
            raise GeneratorSpecError(f"未知のキーです: '{key}'")

    if 'family' not in fields:
        raise GeneratorSpecError(f"family がありません（{', '.join(FAMILIES)}）")
    if 'base' in fields:
        fields['base'] = parse_base_spec(fields['base'], seed=fields['seed'])
    return GeneratorSpec(**fields)


@dataclass
class RunConfig:
    """
    1 回の CLI 実行の設定

    【使用例】
    RunConfig(command='oracle', input=Path('c5.txt'))
    RunConfig(command='color', generator=GeneratorSpec(family='tightness', delta=4))
    """

    command: str
    input: Optional[Path] = None
    generator: Optional[GeneratorSpec] = None
    output: Optional[Path] = None
    coloring: Optional[Path] = None       # verify で検証する彩色 JSON
    dot: Optional[Path] = None            # DOT の出力先
    seed: Optional[int] = None
    budget_nodes: Optional[int] = None
    oracle_cap: Optional[int] = None
    format: str = 'json'
    count: int = DEFAULT_AUDIT_COUNT

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"未知のコマンドです: '{self.command}'（{', '.join(COMMANDS)}）")

        if self.format not in FORMATS:
            raise ValueError(f"format は {' / '.join(FORMATS)} のいずれかです（現在値: '{self.format}'）")

        sources = sum(x is not None for x in (self.input, self.generator))
        if self.command in GRAPH_COMMANDS and sources != 1:
            raise ValueError("入力は --input か生成器指定のどちらか 1 つだけ指定してください")
        if self.command == 'generate' and self.generator is None:
            raise ValueError("generate には生成器指定（--family など）が必要です")
        if self.command == 'generate' and self.input is not None:
            raise ValueError("generate には --input を指定できません")
        if self.command == 'audit' and sources:
            raise ValueError("audit はコーパスを自前で生成するため入力を指定できません")

        if self.command == 'verify' and self.coloring is None:
            raise ValueError("verify には --coloring が必要です")

        if self.budget_nodes is None:
            self.budget_nodes = default_budget_nodes()
        if self.oracle_cap is None:
            self.oracle_cap = default_oracle_cap()
        if self.budget_nodes <= 0:
            raise ValueError(f"budget_nodes は 1 以上で指定してください（現在値: {self.budget_nodes}）")
        if self.oracle_cap <= 0:
            raise ValueError(f"oracle_cap は 1 以上で指定してください（現在値: {self.oracle_cap}）")
        if self.count < 0:
            raise ValueError(f"count は 0 以上で指定してください（現在値: {self.count}）")
        if self.seed is not None and not (0 <= self.seed < 2 ** 64):
            raise ValueError(f"seed は 64bit の非負整数で指定してください（現在値: {self.seed}）")

    @property
    def audit_seed(self) -> int:
        return self.seed if self.seed is not None else DEFAULT_AUDIT_SEED

    def source_name(self) -> str:
        """ログ用の入力名"""
        if self.input is not None:
            return str(self.input)
        if self.generator is not None:
            return self.generator.family
        return '-'
