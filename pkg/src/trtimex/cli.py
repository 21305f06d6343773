"""Command-line driver: ``trtimex tag`` and ``trtimex eval``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .evaluation import EvalReport, score_document
from .exceptions import GoldParseError, InputError, LexiconError
from .lexicon import default_lexicon, load_lexicon
from .normalize import ReferenceDate
from .serialize import parse_gold, render_inline, render_standoff
from .annotate import tag_text

EX_OK = 0
EX_INPUT = 2
EX_BAD_GOLD = 3
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _ref_date(text):
    try:
        return ReferenceDate.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid reference date {text!r}, expected YYYY-MM-DD") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ref-date", type=_ref_date, help="reference date, YYYY-MM-DD")
    common.add_argument("--lexicon", type=Path, help="override lexicon file (TSV)")
    common.add_argument("--strict-case", action="store_true", help="require capitalized month and day names")

    parser = _Parser(prog="trtimex", description="Tag Turkish temporal expressions with TIMEX3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tag = sub.add_parser("tag", parents=[common], help="annotate text")
    tag.add_argument("paths", nargs="*", help="input files; stdin when omitted or '-'")
    tag.add_argument("--format", choices=("inline", "standoff"), default="inline")

    ev = sub.add_parser("eval", parents=[common], help="score against a directory of gold *.tml files")
    ev.add_argument("gold_dir", type=Path)
    ev.add_argument("--json", action="store_true", help="print the report as JSON")
    return parser


def _load(args):
    if args.lexicon is None:
        return default_lexicon()
    return load_lexicon(overrides=args.lexicon)


def _read_input(path: str) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not valid UTF-8: {exc}") from exc


def _report_diagnostics(name, doc):
    for t in doc.timexes:
        for message in t.diagnostics:
            print(f"{name}:{t.start}: {t.text!r}: {message}", file=sys.stderr)


def run_tag(args) -> int:
    lexicon = _load(args)
    paths = args.paths or ["-"]
    for path in paths:
        try:
            text = _read_input(path)
        except (OSError, InputError) as exc:
            print(f"trtimex: cannot read {path}: {exc}", file=sys.stderr)
            return EX_INPUT
        doc = tag_text(text, args.ref_date, lexicon, args.strict_case)
        _report_diagnostics("<stdin>" if path == "-" else path, doc)
        out = render_inline(doc) if args.format == "inline" else render_standoff(doc)
        sys.stdout.write(out)
    sys.stdout.flush()
    return EX_OK


def run_eval(args) -> int:
    lexicon = _load(args)
    gold_dir = args.gold_dir
    if not gold_dir.is_dir():
        print(f"trtimex: gold directory {gold_dir} is not readable", file=sys.stderr)
        return EX_INPUT
    report = EvalReport()
    status = EX_OK
    for path in sorted(gold_dir.glob("*.tml")):
        try:
            gold = parse_gold(path.read_text(encoding="utf-8"))
        except (GoldParseError, UnicodeDecodeError) as exc:
            print(f"trtimex: skipping {path}: {exc}", file=sys.stderr)
            status = EX_BAD_GOLD
            continue
        except OSError as exc:
            print(f"trtimex: cannot read {path}: {exc}", file=sys.stderr)
            return EX_INPUT
        predicted = tag_text(gold.text, args.ref_date, lexicon, args.strict_case)
        report.merge(score_document(gold, predicted))
    if args.json:
        sys.stdout.write(json.dumps(report.as_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.format())
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tag":
            return run_tag(args)
        return run_eval(args)
    except LexiconError as exc:
        print(f"trtimex: {exc}", file=sys.stderr)
        return EX_INPUT


if __name__ == "__main__":
    sys.exit(main())
