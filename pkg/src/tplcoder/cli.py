"""``tplcoder`` command line: annotate, stats, selftest."""

from __future__ import annotations

import argparse
import configparser
import dataclasses
import json
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

from . import __version__
from .corpus import (
    RecordError,
    SamplingMode,
    classify_validity,
    dumps,
    load_heuristics,
    parse_object,
    record_dict,
    select,
)
from .detectors import DetectorConfig, load_config
from .engine import Coder
from .fixtures import FixtureError, check_case, load_fixtures
from .lexicons import LexiconError, load_resources
from .model import Annotation, Validity
from .resolver import render_inline
from .stats import AnnotatedMessage, accumulate, build_report, emit_table, read_csv_rows, shares

EXIT_OK, EXIT_RECORDS, EXIT_FATAL = 0, 1, 2


class Fatal(Exception):
    pass


def _diag(msg: str) -> None:
    print(f"tplcoder: {msg}", file=sys.stderr)


@contextmanager
def _open_in(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdin
        return
    try:
        f = open(path, encoding="utf-8", errors="strict", newline="")
    except OSError as exc:
        raise Fatal(f"cannot read {path}: {exc.strerror}") from None
    with f:
        yield f


@contextmanager
def _open_out(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
        return
    try:
        f = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise Fatal(f"cannot write {path}: {exc.strerror}") from None
    with f:
        yield f


def _coder(args) -> Coder:
    try:
        res = load_resources(args.lexicon_dir)
    except (OSError, LexiconError) as exc:
        raise Fatal(f"bad lexicon data: {exc}") from None
    try:
        if args.config:
            config = load_config(args.config, res.caps_allowlist)
        else:
            config = DetectorConfig(caps_allowlist=res.caps_allowlist)
    except (OSError, ValueError, configparser.Error) as exc:
        raise Fatal(f"bad config {args.config}: {exc}") from None
    return Coder(config, res)


def _read_lines(path: str) -> list[str]:
    with _open_in(path) as f:
        try:
            return f.read().split("\n")
        except UnicodeDecodeError as exc:
            raise Fatal(f"{path} is not valid UTF-8 (byte {exc.start})") from None


def _records(lines: list[str]):
    """Return (lineno, raw dict, Message) triples and the number of bad lines."""
    errors = 0
    out = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            msg = parse_object(raw, lineno)
        except (json.JSONDecodeError, RecordError) as exc:
            _diag(str(exc) if isinstance(exc, RecordError) else f"line {lineno}: malformed JSON: {exc.msg}")
            errors += 1
            continue
        out.append((lineno, raw, msg))
    return out, errors


def cmd_annotate(args) -> int:
    coder = _coder(args)
    heuristics = load_heuristics(args.lexicon_dir)
    records, errors = _records(_read_lines(args.inp))
    with _open_out(args.out) as out:
        for _, _, msg in records:
            anns = coder.annotate(msg)
            validity = classify_validity(msg, heuristics)
            if args.format == "inline":
                rec = {"id": msg.id, "inline": render_inline(msg, anns), "validity": validity.value}
            else:
                rec = record_dict(msg)
                rec["validity"] = validity.value
                rec["annotations"] = [a.to_dict() for a in anns]
            out.write(dumps(rec) + "\n")
    return EXIT_RECORDS if errors else EXIT_OK


def cmd_stats(args) -> int:
    errors = 0
    if args.counts:
        lines = "\n".join(_read_lines(args.inp))
        try:
            rows = read_csv_rows(lines)
        except (ValueError, KeyError) as exc:
            raise Fatal(f"bad counts file: {exc}") from None
    else:
        coder = _coder(args)
        heuristics = load_heuristics(args.lexicon_dir)
        records, errors = _records(_read_lines(args.inp))
        kept = {id(m) for m in select([m for _, _, m in records], SamplingMode(args.mode))}
        items = []
        for lineno, raw, msg in records:
            if id(msg) not in kept:
                continue
            try:
                if "annotations" in raw:
                    anns = tuple(Annotation.from_dict(d) for d in raw["annotations"])
                else:
                    anns = tuple(coder.annotate(msg))
                validity = Validity(raw["validity"]) if "validity" in raw else classify_validity(msg, heuristics)
            except (ValueError, KeyError, TypeError) as exc:
                _diag(f"line {lineno}: {exc}")
                errors += 1
                continue
            items.append(AnnotatedMessage(msg, anns, validity))
        rows = accumulate(items, args.group_by)
    report = build_report(rows, args.with_tpl)
    with _open_out(args.out) as out:
        out.write(emit_table(report, "csv" if args.format == "csv" else "text", args.noun))
    return EXIT_RECORDS if errors else EXIT_OK


def cmd_selftest(args) -> int:
    coder = _coder(args)
    heuristics = load_heuristics(args.lexicon_dir)
    try:
        cases, tables = load_fixtures(args.fixtures)
    except FixtureError as exc:
        raise Fatal(f"fixtures: {exc}") from None
    failed = 0
    for case in cases:
        msg = case.message()
        anns = coder.annotate(msg)
        problems = check_case(case, anns, classify_validity(msg, heuristics))
        if case.inline is not None:
            rendered = render_inline(msg, anns)
            if rendered != case.inline:
                problems.append(f"inline {rendered!r} != {case.inline!r}")
        status = "FAIL" if problems else "ok"
        failed += bool(problems)
        if problems or args.verbose:
            print(f"{status:4}  {case.id:28} {case.text!r}")
            for p in problems:
                print(f"        - {p}")
            if problems:
                got = ", ".join(f"{a.category.value}:{a.subtype}:{a.surface!r}" for a in anns) or "(none)"
                print(f"        got: {got}")
    for table in tables:
        report = table.report()
        lines = {l.label: l.rounded() for l in shares(report.rows)}
        problems = [f"{k}: {lines.get(k)} != {v}" for k, v in table.lines.items() if lines.get(k) != v]
        failed += bool(problems)
        print(f"{'FAIL' if problems else 'ok':4}  table {table.name}")
        for p in problems:
            print(f"        - {p}")
    total = len(cases) + len(tables)
    print(f"{total - failed}/{total} fixtures passed")
    return EXIT_RECORDS if failed else EXIT_OK


CONFIG_HELP = "key = value lines; keys and defaults:\n" + "\n".join(
    f"  {f.name} = {'<file>' if f.name == 'caps_allowlist' else f.default}"
    for f in dataclasses.fields(DetectorConfig)
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tplcoder", description="Code textual paralanguage in short messages.",
                                epilog=CONFIG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="detector configuration file (key = value)")
        sp.add_argument("--lexicon-dir", help="directory overriding the shipped data files")

    a = sub.add_parser("annotate", help="annotate a JSONL corpus")
    a.add_argument("--in", dest="inp", default="-", help="input JSONL (default stdin)")
    a.add_argument("--out", default="-", help="output JSONL (default stdout)")
    a.add_argument("--format", choices=("standoff", "inline"), default="standoff")
    common(a)
    a.set_defaults(func=cmd_annotate)

    s = sub.add_parser("stats", help="count annotations per account")
    s.add_argument("--in", dest="inp", default="-", help="raw or annotated JSONL, or CSV counts with --counts")
    s.add_argument("--out", default="-")
    s.add_argument("--format", choices=("table", "csv"), default="table")
    s.add_argument("--mode", choices=[m.value for m in SamplingMode], default="brand")
    s.add_argument("--group-by", choices=("account", "kind"), default="account")
    s.add_argument("--counts", action="store_true", help="input is pre-counted CSV rows")
    s.add_argument("--with-tpl", type=int, help="override the number of messages containing TPL")
    s.add_argument("--noun", default="messages", help="word used in the footnote")
    common(s)
    s.set_defaults(func=cmd_stats)

    t = sub.add_parser("selftest", help="run the shipped golden fixtures")
    t.add_argument("--fixtures", help="fixture directory (default: shipped)")
    t.add_argument("-v", "--verbose", action="store_true")
    common(t)
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Fatal as exc:
        _diag(str(exc))
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
