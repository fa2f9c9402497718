"""
CLI のサブコマンド

recognize / color / verify / oracle / audit / generate を実装する。
各 cmd_* は終了コードを返し、レポートは標準出力（または --output）に書く。
JSON は sort_keys で出力し、時間などの非決定的な値は含めない。
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from src.audit import CorpusSpec, run_audit
from src.coloring import exact_chi_s, strong_color_bound, strong_color_chordless, verify_strong
from src.data_sources import EdgeListSource, GeneratorSpec, generate
from src.models import Graph, StrongEdgeColoring
from src.models.errors import ColoringCoverageError, EdgeColoringError, GraphFormatError, NotChordlessError
from src.outputs import ReportRenderer
from src.structure import blocks, is_chordless, is_two_connected, leafblocks
from src.cli.run_config import (
    COMMANDS, FORMATS, RunConfig, default_log_level, parse_base_spec, parse_generator_spec
)

logger = logging.getLogger(__name__)

# 終了コード
EXIT_OK = 0
EXIT_FALSE = 1          # 性質が偽（chordless でない、彩色が不正、監査失敗）
EXIT_REFUSED = 2        # 入力の前提を満たさない（弦がある、辺がない）
EXIT_IO_ERROR = 3       # 入出力・解析エラー
EXIT_COVERAGE = 4       # 彩色が一部の辺を覆っていない
EXIT_PARTIAL = 5        # オラクルが上下界しか返せなかった


# =====================================
# 【引数】
# =====================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='strong_color',
        description='chordless グラフの strong 辺彩色（3Δ 色以下）と構造検査'
    )
    parser.add_argument('command', choices=COMMANDS, help='実行するサブコマンド')
    parser.add_argument('--input', type=Path, help='エッジリストまたは JSON のグラフファイル')
    parser.add_argument('--generator', help="インライン生成器指定（例: 'family=tightness delta=5'）")
    parser.add_argument('--family', help='生成器の family（--generator の代わり）')
    parser.add_argument('--delta', type=int, help='tightness / star の Δ')
    parser.add_argument('--n', type=int, help='頂点数')
    parser.add_argument('--m', type=int, help='random-subdivision の元グラフの辺数')
    parser.add_argument('--ears', type=int, help='tree-ears の耳の数')
    parser.add_argument('--base', help="full-subdivision の元グラフ（例: 'complete:4'、generate では --input も可）")
    parser.add_argument('--seed', type=int, help='乱数シード（audit の既定は 7）')
    parser.add_argument('--budget-nodes', type=int, help='探索ノード予算（既定: STRONG_COLOR_BUDGET_NODES）')
    parser.add_argument('--oracle-cap', type=int, help='オラクルの辺数上限（既定: STRONG_COLOR_ORACLE_CAP）')
    parser.add_argument('--format', choices=FORMATS, default='json', help='出力形式')
    parser.add_argument('--output', type=Path, help='出力ファイル（省略時は標準出力）')
    parser.add_argument('--coloring', type=Path, help='verify で検証する彩色 JSON')
    parser.add_argument('--dot', type=Path, help='証拠や彩色を DOT で書き出すファイル')
    parser.add_argument('--count', type=int, default=200, help='audit のコーパスの Δ ≥ 3 のグラフ数')
    parser.add_argument('--verbose', '-v', action='count', default=0, help='ログを詳しく（-vv で DEBUG）')
    return parser


def _base_graph(args: argparse.Namespace) -> Optional[Graph]:
    """
    full-subdivision の元グラフ（--base か、generate では --input のファイル）

    例外:
        ValueError: 指定が不正な場合、またはファイルが読めない場合
    """
    if args.base is not None and args.input is not None:
        raise ValueError("--base と --input は同時に指定できません")
    if args.base is not None:
        return parse_base_spec(args.base, seed=args.seed or 0)
    if args.command == 'generate' and args.family == 'full-subdivision' and args.input is not None:
        try:
            return EdgeListSource().load_file(args.input)
        except OSError as e:
            raise ValueError(f"元グラフを読めません: {e}") from e
    return None


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    引数から RunConfig を作成

    例外:
        ValueError: 引数の組み合わせが不正な場合（GeneratorSpecError を含む）
    """
    generator: Optional[GeneratorSpec] = None
    if args.generator is not None and args.family is not None:
        raise ValueError("--generator と --family は同時に指定できません")
    if args.base is not None and args.family is None:
        raise ValueError("--base は --family と一緒に指定してください（インライン指定では base=...）")
    if args.generator is not None:
        generator = parse_generator_spec(args.generator, seed=args.seed or 0)
    elif args.family is not None:
        options: Dict[str, Any] = {'family': args.family, 'seed': args.seed or 0}
        for key in ('n', 'delta', 'm', 'ears'):
            value = getattr(args, key)
            if value is not None:
                options[key] = value
        base = _base_graph(args)
        if base is not None:
            options['base'] = base
        generator = GeneratorSpec(**options)

    source = args.input
    if args.command == 'generate' and args.family == 'full-subdivision' and args.base is None:
        source = None   # 元グラフとして読み込み済み
    return RunConfig(
        command=args.command,
        input=source,
        generator=generator,
        output=args.output,
        coloring=args.coloring,
        dot=args.dot,
        seed=args.seed,
        budget_nodes=args.budget_nodes,
        oracle_cap=args.oracle_cap,
        format=args.format,
        count=args.count
    )


# =====================================
# 【入出力】
# =====================================

def load_graph(cfg: RunConfig) -> Graph:
    """
    入力ファイルまたは生成器からグラフを得る

    例外:
        OSError: ファイルが読めない場合
        GraphFormatError: 形式が不正な場合
    """
    if cfg.input is not None:
        return EdgeListSource().load_file(cfg.input)
    graph = generate(cfg.generator)
    logger.info("✅ 生成しました: %s（頂点 %d / 辺 %d）", cfg.generator.family, graph.n, graph.num_edges)
    return graph


def load_coloring(path: Path) -> StrongEdgeColoring:
    """
    彩色 JSON を読み込む（color コマンドの出力をそのまま受け付ける）

    例外:
        GraphFormatError: JSON として不正な場合
    """
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise GraphFormatError(e.lineno, f"彩色 JSON の解析に失敗しました: {e.msg}") from e
    try:
        return StrongEdgeColoring.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(None, f"彩色 JSON の形式が不正です: {e}") from e


def dump_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + '\n'


def _write(cfg: RunConfig, text: str, stdout: Optional[TextIO]) -> None:
    if cfg.output is not None:
        cfg.output.write_text(text, encoding='utf-8')
        logger.info("✅ 書き出しました: %s", cfg.output)
    else:
        (stdout if stdout is not None else sys.stdout).write(text)


def emit(cfg: RunConfig, kind: str, report: Dict[str, Any], stdout: Optional[TextIO]) -> None:
    """レポートを cfg.format で出力"""
    if cfg.format == 'json':
        _write(cfg, dump_json(report), stdout)
    else:
        _write(cfg, ReportRenderer().render(kind, report), stdout)


def _write_dot(
    cfg: RunConfig,
    g: Graph,
    witness: Optional[Dict[str, Any]] = None,
    coloring: Optional[StrongEdgeColoring] = None
) -> None:
    if cfg.dot is None:
        return
    cfg.dot.write_text(ReportRenderer().render_dot(g, witness=witness, coloring=coloring), encoding='utf-8')
    logger.info("✅ DOT を書き出しました: %s", cfg.dot)


# =====================================
# 【サブコマンド】
# =====================================

def recognize_report(g: Graph) -> Dict[str, Any]:
    """chordless 判定・Δ・ブロック統計・極小 2 連結判定をまとめる"""
    recognition = is_chordless(g)
    decomposition = blocks(g)
    delta = g.max_degree()
    two_connected = is_two_connected(g)
    return {
        'chordless': recognition.chordless,
        'witness': recognition.witness.to_dict() if recognition.witness else None,
        'delta': delta,
        'n': g.n,
        'm': g.num_edges,
        'blocks': len(decomposition.blocks),
        'cutvertices': len(decomposition.cutvertices),
        'leafblocks': len(leafblocks(decomposition)),
        'two_connected': two_connected,
        'minimally_2_connected': two_connected and recognition.chordless,
        'bound': strong_color_bound(delta) if recognition.chordless else None
    }


def cmd_recognize(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """chordless なら 0、弦があれば 1"""
    g = load_graph(cfg)
    report = recognize_report(g)
    emit(cfg, 'recognize', report, stdout)
    _write_dot(cfg, g, witness=report['witness'])
    return EXIT_OK if report['chordless'] else EXIT_FALSE


def cmd_color(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """検証済みの strong 辺彩色を出力（弦がある・辺がない入力は拒否して 2）"""
    g = load_graph(cfg)
    if g.num_edges == 0:
        logger.error("❌ 辺のないグラフは彩色できません")
        return EXIT_REFUSED
    try:
        result = strong_color_chordless(g, budget=cfg.budget_nodes)
    except NotChordlessError as e:
        logger.error("❌ chordless ではないため彩色できません: 弦 %s", e.witness.chord)
        emit(cfg, 'recognize', recognize_report(g), stdout)
        _write_dot(cfg, g, witness=e.witness.to_dict())
        return EXIT_REFUSED

    report = result.to_dict()
    report['valid'] = bool(verify_strong(g, result.coloring))
    logger.info(
        "✅ %d 色（上限 %d、3Δ=%d、辺彩色: %s）",
        result.colors_used, result.bound_claimed, 3 * result.delta, result.edge_coloring_path
    )
    emit(cfg, 'color', report, stdout)
    _write_dot(cfg, g, coloring=result.coloring)
    return EXIT_OK if report['valid'] else EXIT_FALSE


def cmd_verify(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Valid なら 0、違反があれば 1、色のない辺があれば 4"""
    g = load_graph(cfg)
    coloring = load_coloring(cfg.coloring)
    try:
        verdict = verify_strong(g, coloring)
    except ColoringCoverageError as e:
        logger.error("❌ %s", e)
        emit(cfg, 'verify', {
            'valid': False,
            'reason': 'coverage',
            'missing': [list(edge) for edge in e.missing_edges]
        }, stdout)
        return EXIT_COVERAGE

    emit(cfg, 'verify', verdict.to_dict(), stdout)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_oracle(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """最適値が求まれば 0、上下界だけなら 5"""
    g = load_graph(cfg)
    result = exact_chi_s(g, budget=cfg.budget_nodes, cap=cfg.oracle_cap)
    emit(cfg, 'oracle', result.to_dict(), stdout)
    _write_dot(cfg, g, coloring=result.coloring)
    return EXIT_OK if result.is_optimal else EXIT_PARTIAL


def cmd_audit(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """全項目が成功すれば 0"""
    spec = CorpusSpec(count=cfg.count, seed=cfg.audit_seed)
    report = run_audit(spec, budget=cfg.budget_nodes)
    emit(cfg, 'audit', report.to_dict(), stdout)
    return EXIT_OK if report.passed else EXIT_FALSE


def cmd_generate(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """生成したグラフをエッジリスト（text）または JSON で出力"""
    g = generate(cfg.generator)
    if cfg.format == 'json':
        _write(cfg, EdgeListSource.to_json(g) + '\n', stdout)
    else:
        _write(cfg, EdgeListSource.serialize(g), stdout)
    _write_dot(cfg, g)
    return EXIT_OK


HANDLERS = {
    'recognize': cmd_recognize,
    'color': cmd_color,
    'verify': cmd_verify,
    'oracle': cmd_oracle,
    'audit': cmd_audit,
    'generate': cmd_generate,
}


def log_level(verbose: int) -> str:
    """-v は INFO、-vv は DEBUG、指定なしは STRONG_COLOR_LOG_LEVEL"""
    if verbose >= 2:
        return 'DEBUG'
    if verbose == 1:
        return 'INFO'
    return default_log_level()


def execute(args: argparse.Namespace, stdout: Optional[TextIO] = None) -> int:
    """
    解析済みの引数でサブコマンドを実行

    戻り値:
        int: 終了コード
    """
    try:
        cfg = config_from_args(args)
    except ValueError as e:
        logger.error("❌ 設定エラー: %s", e)
        return EXIT_IO_ERROR

    logger.info("📡 %s: %s", cfg.command, cfg.source_name())
    try:
        return HANDLERS[cfg.command](cfg, stdout)
    except (OSError, GraphFormatError, EdgeColoringError) as e:
        logger.error("❌ 入力エラー: %s", e)
        return EXIT_IO_ERROR
    except ValueError as e:
        logger.error("❌ %s", e)
        return EXIT_REFUSED


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    引数を解析してサブコマンドを実行

    パラメータ:
        argv (List[str], optional): 引数（省略時は sys.argv[1:]）
        stdout (TextIO): レポートの出力先

    戻り値:
        int: 終了コード
    """
    return execute(build_parser().parse_args(argv), stdout)
