"""
chordless グラフの strong 辺彩色 CLI

例:
    python scripts/strong_color.py recognize --input c5.txt --format text
    python scripts/strong_color.py color --family tightness --delta 4 --output coloring.json
    python scripts/strong_color.py verify --input c5.txt --coloring coloring.json
    python scripts/strong_color.py oracle --generator 'family=cycle n=5'
    python scripts/strong_color.py audit --count 200 --seed 7

標準出力にはレポートだけを書き、進捗は標準エラーに出す。
"""

import logging
import sys
from pathlib import Path

# Windows環境でのUTF-8出力を有効化
if sys.platform == 'win32':
    import io
    sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8')
    sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding='utf-8')

# プロジェクトのルートディレクトリをパスに追加
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli import EXIT_IO_ERROR, build_parser, execute, log_level

# .env ファイルを読み込む（STRONG_COLOR_* の既定値）
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # python-dotenv がなくても環境変数はそのまま使える


def main():
    """
    CLI のメイン処理
    """
    args = build_parser().parse_args()

    logging.basicConfig(
        level=log_level(args.verbose),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )

    if args.verbose:
        print(f"\n{'='*60}", file=sys.stderr)
        print(f"🚀 strong_color {args.command}", file=sys.stderr)
        print(f"{'='*60}\n", file=sys.stderr)

    try:
        code = execute(args)

    except KeyboardInterrupt:
        print("\n\n⚠️ ユーザーによって中断されました", file=sys.stderr)
        sys.exit(130)

    except Exception as e:
        print(f"\n❌ エラーが発生しました: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        sys.exit(EXIT_IO_ERROR)

    if args.verbose:
        status = "🎉 完了" if code == 0 else f"⚠️ 終了コード {code}"
        print(f"\n{status}", file=sys.stderr)
    sys.exit(code)


if __name__ == "__main__":
    main()
