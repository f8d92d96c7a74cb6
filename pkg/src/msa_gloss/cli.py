"""Command-line entry point.

    msa-gloss translate [--format inline|json|tsv] [--input PATH|-]
    msa-gloss analyze   [--input PATH|-]
    msa-gloss eval      [--input GOLD.tsv|-] [--format inline|json]

Without --input, eval scores the bundled gold corpus.

Exit codes: 0 success, 1 I/O or configuration error, 2 gold-corpus error.
Only results go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Iterator, TextIO

from .arabic_text import segment
from .errors import GoldParseError, LexiconError, RuleSetError
from .evaluation import default_gold_path, evaluate, load_gold, parse_gold
from .gloss import RenderFormat
from .morphology import analyze_sentence, default_lexicon_path, load_lexicon
from .pipeline import run_pipeline
from .rules import DEFAULT_RULES, load_rules

EXIT_OK = 0
EXIT_IO = 1
EXIT_GOLD = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", metavar="PATH", help="lexicon TSV (default: bundled seed lexicon)")
    common.add_argument("--rules", metavar="PATH", help="rule override file")
    common.add_argument("--input", metavar="PATH", help="input file, '-' for stdin (default)")

    parser = argparse.ArgumentParser(prog="msa-gloss", description="Arabic text to sign-language gloss.")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("translate", parents=[common], help="emit one gloss record per sentence")
    tr.add_argument("--format", choices=[f.value for f in RenderFormat], default="inline")

    sub.add_parser("analyze", parents=[common], help="emit per-token analyses as JSON lines")

    ev = sub.add_parser("eval", parents=[common], help="score the pipeline on a gold corpus")
    ev.add_argument("--format", choices=["inline", "json"], default="inline")
    return parser


@contextlib.contextmanager
def _open_input(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


def _write(line: str) -> None:
    sys.stdout.write(line + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    # stdout/stdin must be UTF-8 regardless of locale
    for stream in (sys.stdout, sys.stdin):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")

    try:
        lexicon = load_lexicon(args.lexicon or default_lexicon_path())
        rules = load_rules(args.rules) if args.rules else DEFAULT_RULES

        if args.command == "translate":
            with _open_input(args.input or "-") as fh:
                for record in run_pipeline(fh, lexicon, rules, args.format):
                    _write(record)
        elif args.command == "analyze":
            with _open_input(args.input or "-") as fh:
                for line in fh:
                    for sentence in segment(line):
                        analyses = analyze_sentence(sentence, lexicon, rules)
                        _write(json.dumps([a.to_dict() for a in analyses], ensure_ascii=False))
        else:
            if args.input == "-":
                gold = parse_gold(sys.stdin, "<stdin>")
            else:
                gold = load_gold(args.input or default_gold_path())
            report = evaluate(gold, lexicon, rules)
            if args.format == "json":
                _write(json.dumps(report.to_dict(), ensure_ascii=False))
            else:
                _write(report.format())
    except GoldParseError as exc:
        print(f"msa-gloss: gold corpus error: {exc}", file=sys.stderr)
        return EXIT_GOLD
    except (LexiconError, RuleSetError) as exc:
        print(f"msa-gloss: configuration error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OSError, UnicodeDecodeError) as exc:
        print(f"msa-gloss: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
