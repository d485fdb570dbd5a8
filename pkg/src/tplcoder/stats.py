"""Per-account counts, category shares and the printed table layout."""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .model import CATEGORY_ORDER, AccountKind, Annotation, Category, Message, Validity

CSV_COLUMNS = ("account_kind", "account", "messages_analyzed", "messages_with_tpl", "instances",
               "VQ", "VS", "TK", "VK", "A")


@dataclass(frozen=True)
class StatsRow:
    account: str
    account_kind: AccountKind
    messages_analyzed: int
    messages_with_tpl: Optional[int]
    instances_by_category: tuple[int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "account_kind", AccountKind(self.account_kind))
        object.__setattr__(self, "instances_by_category", tuple(int(c) for c in self.instances_by_category))
        if len(self.instances_by_category) != 5 or min(self.instances_by_category) < 0:
            raise ValueError("instances_by_category needs five non-negative counts")
        if self.messages_with_tpl is not None and not 0 <= self.messages_with_tpl <= self.messages_analyzed:
            raise ValueError("messages_with_tpl must lie between 0 and messages_analyzed")

    @property
    def instances_total(self) -> int:
        return sum(self.instances_by_category)

    @property
    def key(self) -> tuple[int, str]:
        return self.account_kind.rank, self.account

    def count(self, category: Category) -> int:
        return self.instances_by_category[category.rank]

    def __add__(self, other: "StatsRow") -> "StatsRow":
        if (self.account_kind, self.account) != (other.account_kind, other.account):
            raise ValueError("can only add rows for the same account")
        with_tpl = (None if self.messages_with_tpl is None or other.messages_with_tpl is None
                    else self.messages_with_tpl + other.messages_with_tpl)
        return StatsRow(self.account, self.account_kind, self.messages_analyzed + other.messages_analyzed, with_tpl,
                        tuple(a + b for a, b in zip(self.instances_by_category, other.instances_by_category)))


@dataclass(frozen=True)
class AnnotatedMessage:
    message: Message
    annotations: tuple[Annotation, ...]
    validity: Validity = Validity.VALID


def accumulate(annotated: Iterable[AnnotatedMessage], group_by: str = "account") -> list[StatsRow]:
    """Count valid messages and their annotations per account (or per account kind)."""
    if group_by not in ("account", "kind"):
        raise ValueError(f"group_by must be 'account' or 'kind', not {group_by!r}")
    rows: dict[tuple[AccountKind, str], StatsRow] = {}
    for item in annotated:
        if item.validity is not Validity.VALID:
            continue
        kind = item.message.account_kind
        account = item.message.account if group_by == "account" else kind.value
        counts = Counter(a.category for a in item.annotations)
        row = StatsRow(account, kind, 1, 1 if item.annotations else 0,
                       tuple(counts[c] for c in CATEGORY_ORDER))
        key = (kind, account)
        rows[key] = rows[key] + row if key in rows else row
    return sorted(rows.values(), key=lambda r: r.key)


# -- rounding and shares ----------------------------------------------------------

def round_half_up(value: Fraction, places: int = 1) -> Fraction:
    scale = 10 ** places
    return Fraction(math.floor(value * scale + Fraction(1, 2)), scale)


def fmt_pct(value: Optional[Fraction]) -> str:
    return "0.0" if value is None else f"{float(round_half_up(value)):.1f}"


def percent(part: int, whole: int) -> Optional[Fraction]:
    return None if whole == 0 else Fraction(100 * part, whole)


@dataclass(frozen=True)
class ShareLine:
    label: str
    instances: int
    shares: tuple[Fraction, ...]

    def rounded(self) -> tuple[float, ...]:
        return tuple(float(round_half_up(s)) for s in self.shares)


def _line(label: str, rows: Sequence[StatsRow]) -> Optional[ShareLine]:
    totals = [sum(r.instances_by_category[i] for r in rows) for i in range(5)]
    whole = sum(totals)
    if whole == 0:
        return None
    return ShareLine(label, whole, tuple(Fraction(100 * t, whole) for t in totals))


def shares(rows: Sequence[StatsRow], grouping: str = "kind") -> list[ShareLine]:
    """Category shares per account kind followed by the overall line.

    ``grouping="overall"`` gives only the overall line. Groups without any
    instances produce no line.
    """
    out: list[ShareLine] = []
    if grouping == "kind":
        for kind in AccountKind:
            line = _line(kind.value, [r for r in rows if r.account_kind is kind])
            if line is not None:
                out.append(line)
    elif grouping != "overall":
        raise ValueError(f"grouping must be 'kind' or 'overall', not {grouping!r}")
    line = _line("overall", rows)
    if line is not None:
        out.append(line)
    return out


# -- reports ---------------------------------------------------------------------

@dataclass(frozen=True)
class StatsReport:
    """Rows plus an optional message-level TPL total.

    ``with_tpl_total`` covers tables that only publish the overall number
    of messages containing TPL, not a per-account figure.
    """

    rows: tuple[StatsRow, ...] = ()
    with_tpl_total: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(sorted(self.rows, key=lambda r: r.key)))

    @property
    def messages_analyzed(self) -> int:
        return sum(r.messages_analyzed for r in self.rows)

    @property
    def messages_with_tpl(self) -> Optional[int]:
        if self.with_tpl_total is not None:
            return self.with_tpl_total
        if any(r.messages_with_tpl is None for r in self.rows):
            return None
        return sum(r.messages_with_tpl for r in self.rows)

    @property
    def instances_total(self) -> int:
        return sum(r.instances_total for r in self.rows)

    @property
    def prevalence(self) -> Optional[Fraction]:
        with_tpl = self.messages_with_tpl
        if with_tpl is None:
            return None
        return percent(with_tpl, self.messages_analyzed)

    @property
    def group_shares(self) -> dict[str, tuple[Fraction, ...]]:
        return {l.label: l.shares for l in shares(self.rows, "kind") if l.label != "overall"}

    @property
    def overall_shares(self) -> Optional[tuple[Fraction, ...]]:
        lines = shares(self.rows, "overall")
        return lines[0].shares if lines else None


def build_report(rows: Iterable[StatsRow], with_tpl_total: Optional[int] = None) -> StatsReport:
    return StatsReport(tuple(rows), with_tpl_total)


def merge(a: StatsReport, b: StatsReport) -> StatsReport:
    """Add two reports account by account; the empty report is the identity."""
    rows: dict[tuple[AccountKind, str], StatsRow] = {}
    for r in a.rows + b.rows:
        key = (r.account_kind, r.account)
        rows[key] = rows[key] + r if key in rows else r
    total = None
    if a.with_tpl_total is not None or b.with_tpl_total is not None:
        ta, tb = a.messages_with_tpl, b.messages_with_tpl
        total = None if ta is None or tb is None else ta + tb
    return StatsReport(tuple(rows.values()), total)


# -- output ----------------------------------------------------------------------

HEADERS = ("Account Type", "Account", "Instances of TPL") + tuple(c.label for c in CATEGORY_ORDER)


def row_cells(row: StatsRow) -> list[str]:
    total = row.instances_total
    return [str(total)] + [f"{c} ({fmt_pct(percent(c, total))}%)" for c in row.instances_by_category]


def footnote(report: StatsReport, noun: str = "messages") -> str:
    n = report.messages_analyzed
    with_tpl = report.messages_with_tpl
    if with_tpl is None:
        return f"{n:,} {noun} were analyzed."
    return (f"Of the {n:,} {noun} that were analyzed, {with_tpl:,} ({fmt_pct(report.prevalence)}%) "
            f"contained one or more instances of TPL.")


def emit_table(report: StatsReport, format: str = "text", noun: str = "messages") -> str:
    """Render ``report`` as aligned text (``"text"``) or CSV (``"csv"``)."""
    if format == "csv":
        return emit_csv(report.rows)
    if format != "text":
        raise ValueError(f"unknown table format {format!r}")
    grid: list[list[str]] = [list(HEADERS)]
    for kind in AccountKind:
        group = [r for r in report.rows if r.account_kind is kind]
        for i, r in enumerate(group):
            grid.append([kind.value.capitalize() if i == 0 else "", r.account] + row_cells(r))
        line = _line(kind.value, group)
        if line is not None:
            grid.append(["", "", ""] + [f"{fmt_pct(s)}%" for s in line.shares])
    overall = _line("overall", report.rows)
    if overall is not None:
        grid.append(["Overall", "", str(overall.instances)] + [f"{fmt_pct(s)}%" for s in overall.shares])
    widths = [max(len(r[i]) for r in grid) for i in range(len(HEADERS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in grid]
    lines += ["", footnote(report, noun)]
    return "\n".join(lines) + "\n"


def emit_csv(rows: Iterable[StatsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([r.account_kind.value, r.account, r.messages_analyzed,
                    "" if r.messages_with_tpl is None else r.messages_with_tpl, r.instances_total,
                    *r.instances_by_category])
    return buf.getvalue()


def read_csv_rows(text: Union[str, io.TextIOBase]) -> list[StatsRow]:
    """Parse :func:`emit_csv` output (extra columns are ignored)."""
    reader = csv.DictReader(io.StringIO(text) if isinstance(text, str) else text)
    rows = []
    for rec in reader:
        counts = tuple(int(rec[c.value]) for c in CATEGORY_ORDER)
        if rec.get("instances") not in (None, "") and int(rec["instances"]) != sum(counts):
            raise ValueError(f"{rec['account']}: category counts do not add up to instances")
        with_tpl = rec.get("messages_with_tpl")
        rows.append(StatsRow(rec["account"], AccountKind(rec["account_kind"]), int(rec["messages_analyzed"]),
                             int(with_tpl) if with_tpl not in (None, "") else None, counts))
    return rows
