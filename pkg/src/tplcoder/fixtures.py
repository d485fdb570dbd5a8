"""Shipped golden cases and count tables, guarded by a checksum file."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .model import Annotation, Category, Message, Validity
from .stats import StatsReport, StatsRow, build_report, read_csv_rows

CHECKSUMS = "SHA256SUMS"


class FixtureError(Exception):
    def __init__(self, message: str, file: Optional[str] = None):
        super().__init__(f"{file}: {message}" if file else message)
        self.file = file


@dataclass(frozen=True)
class Expected:
    category: Category
    surface: Optional[str] = None
    subtype: Optional[str] = None

    def matches(self, ann: Annotation) -> bool:
        return (ann.category is self.category
                and (self.surface is None or ann.surface == self.surface)
                and (self.subtype is None or ann.subtype == self.subtype))


@dataclass(frozen=True)
class GoldenCase:
    id: str
    text: str
    expect: tuple[Expected, ...]
    exact: bool
    source: str
    platform: str = "generic"
    validity: Optional[Validity] = None
    is_repost: bool = False
    inline: Optional[str] = None

    def message(self) -> Message:
        return Message(self.id, self.text, platform=self.platform, is_repost=self.is_repost)


@dataclass(frozen=True)
class TableFixture:
    name: str
    rows: tuple[StatsRow, ...]
    messages_analyzed: int
    messages_with_tpl: int
    instances: int
    prevalence: float
    lines: dict[str, tuple[float, ...]]
    printed: dict[str, str]

    def report(self) -> StatsReport:
        return build_report(self.rows, self.messages_with_tpl)


def _default_dir():
    return resources.files("tplcoder").joinpath("data").joinpath("fixtures")


def _verify(directory) -> dict[str, bytes]:
    try:
        listing = directory.joinpath(CHECKSUMS).read_text(encoding="utf-8")
    except (FileNotFoundError, NotADirectoryError, OSError):
        raise FixtureError("checksum file missing", CHECKSUMS) from None
    files = {}
    for line in listing.splitlines():
        if not line.strip():
            continue
        digest, _, name = line.partition("  ")
        try:
            data = directory.joinpath(name).read_bytes()
        except (FileNotFoundError, OSError):
            raise FixtureError("listed fixture is missing", name) from None
        if hashlib.sha256(data).hexdigest() != digest:
            raise FixtureError("checksum mismatch", name)
        files[name] = data
    return files


def _case(obj: dict) -> GoldenCase:
    return GoldenCase(
        id=obj["id"],
        text=obj["text"],
        expect=tuple(Expected(Category(e["category"]), e.get("surface"), e.get("subtype")) for e in obj["expect"]),
        exact=bool(obj.get("exact", False)),
        source=obj["source"],
        platform=obj.get("platform", "generic"),
        validity=Validity(obj["validity"]) if obj.get("validity") else None,
        is_repost=bool(obj.get("is_repost", False)),
        inline=obj.get("inline"),
    )


def load_fixtures(directory: Union[str, Path, None] = None) -> tuple[list[GoldenCase], list[TableFixture]]:
    """Load golden cases and table fixtures after checking every checksum."""
    d = _default_dir() if directory is None else Path(directory)
    files = _verify(d)
    for required in ("golden.jsonl", "tables.json"):
        if required not in files:
            raise FixtureError("not covered by the checksum file", required)
    try:
        cases = [_case(json.loads(l)) for l in files["golden.jsonl"].decode("utf-8").splitlines() if l.strip()]
    except (ValueError, KeyError) as exc:
        raise FixtureError(f"malformed case: {exc}", "golden.jsonl") from None
    try:
        manifest = json.loads(files["tables.json"].decode("utf-8"))
    except ValueError as exc:
        raise FixtureError(f"malformed manifest: {exc}", "tables.json") from None
    tables = []
    for name, spec in manifest.items():
        csv_name = spec["csv"]
        if csv_name not in files:
            raise FixtureError("not covered by the checksum file", csv_name)
        text = files[csv_name].decode("utf-8")
        try:
            rows = read_csv_rows(text)
        except (ValueError, KeyError) as exc:
            raise FixtureError(str(exc), csv_name) from None
        printed = {r["account"]: r.get("printed", "") for r in csv.DictReader(io.StringIO(text))}
        tables.append(TableFixture(
            name=name, rows=tuple(rows), messages_analyzed=spec["messages_analyzed"],
            messages_with_tpl=spec["messages_with_tpl"], instances=spec["instances"],
            prevalence=spec["prevalence"], lines={k: tuple(v) for k, v in spec["lines"].items()},
            printed=printed,
        ))
    return cases, tables


def check_case(case: GoldenCase, annotations: list[Annotation], validity: Optional[Validity] = None) -> list[str]:
    """Describe every way ``annotations`` miss ``case``; empty means pass."""
    problems = []
    remaining = list(annotations)
    for e in case.expect:
        hit = next((a for a in remaining if e.matches(a)), None)
        if hit is None:
            problems.append(f"missing {e.category.value} {e.subtype or ''} {e.surface!r}".replace("  ", " "))
        else:
            remaining.remove(hit)
    if case.exact and remaining:
        problems += [f"unexpected {a.category.value} {a.subtype} {a.surface!r}" for a in remaining]
    if case.validity is not None and validity is not case.validity:
        problems.append(f"validity {validity.value if validity else None}, expected {case.validity.value}")
    return problems
