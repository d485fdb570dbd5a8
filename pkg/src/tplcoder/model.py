"""Core value types shared across the engine.

All offsets are counted in Unicode scalar values (Python ``str`` indices),
never bytes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from datetime import datetime
from typing import Optional


class Platform(str, enum.Enum):
    TWITTER = "twitter"
    FACEBOOK = "facebook"
    INSTAGRAM = "instagram"
    GENERIC = "generic"


class AccountKind(str, enum.Enum):
    CORPORATE = "corporate"
    SPOKESCHARACTER = "spokescharacter"
    CONSUMER = "consumer"
    UNKNOWN = "unknown"

    @property
    def rank(self) -> int:
        return _KIND_ORDER.index(self)


_KIND_ORDER = list(AccountKind)


class Category(str, enum.Enum):
    """The five paralanguage types, in display and nesting order."""

    VQ = "VQ"
    VS = "VS"
    TK = "TK"
    VK = "VK"
    A = "A"

    @property
    def rank(self) -> int:
        return CATEGORY_ORDER.index(self)

    @property
    def label(self) -> str:
        return _CATEGORY_LABELS[self]


CATEGORY_ORDER = list(Category)

_CATEGORY_LABELS = {
    Category.VQ: "Voice Quality",
    Category.VS: "Vocalization",
    Category.TK: "Tactile Kinesic",
    Category.VK: "Visual Kinesic",
    Category.A: "Artifact",
}

# Subtypes are scoped by category. Order within a tuple is the tie-break
# priority used when two same-category candidates cover the same span.
SUBTYPES: dict[Category, tuple[str, ...]] = {
    Category.VQ: (
        "Spelling",
        "Censorship",
        "Silence",
        "Rhythm",
        "ScareQuotes",
        "Intensity",
        "Emphasis",
        "Tempo",
        "Pitch",
        "Intonation",
        "Stress",
    ),
    Category.VS: ("LexiconEntry",),
    Category.TK: ("LexiconEntry", "Emoji"),
    Category.VK: ("Emoticon", "Emoji", "LexiconEntry"),
    Category.A: ("Emoji", "Symbol", "Formatting"),
}


def subtype_rank(category: Category, subtype: Optional[str]) -> int:
    if subtype is None:
        return len(SUBTYPES[category])
    return SUBTYPES[category].index(subtype)


class Validity(str, enum.Enum):
    VALID = "valid"
    BOT = "bot"
    SPAM = "spam"
    NON_ENGLISH = "noten"


@dataclass(frozen=True, order=True)
class Span:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span {self.start}..{self.end}")

    def __len__(self) -> int:
        return self.end - self.start

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end


@dataclass(frozen=True)
class Annotation:
    span: Span
    category: Category
    subtype: Optional[str]
    surface: str
    canonical: Optional[str] = None
    rule_id: str = ""

    def __post_init__(self):
        if not isinstance(self.category, Category):
            object.__setattr__(self, "category", Category(self.category))
        if self.subtype is not None and self.subtype not in SUBTYPES[self.category]:
            raise ValueError(f"subtype {self.subtype!r} does not belong to {self.category.value}")
        if len(self.surface) != len(self.span):
            raise ValueError("surface length does not match span")

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    def sort_key(self):
        return (
            self.span.start,
            self.category.rank,
            -self.span.end,
            subtype_rank(self.category, self.subtype),
            self.rule_id,
            self.canonical or "",
        )

    def to_dict(self) -> dict:
        return {
            "start": self.span.start,
            "end": self.span.end,
            "category": self.category.value,
            "subtype": self.subtype,
            "surface": self.surface,
            "canonical": self.canonical,
            "rule_id": self.rule_id,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Annotation":
        return cls(
            span=Span(int(d["start"]), int(d["end"])),
            category=Category(d["category"]),
            subtype=d.get("subtype"),
            surface=d["surface"],
            canonical=d.get("canonical"),
            rule_id=d.get("rule_id", ""),
        )


def annotate_span(text: str, start: int, end: int, category: Category, subtype: Optional[str],
                  rule_id: str, canonical: Optional[str] = None) -> Annotation:
    """Build an annotation whose surface is taken from ``text``."""
    return Annotation(Span(start, end), category, subtype, text[start:end], canonical, rule_id)


def check_annotation(ann: Annotation, text: str) -> None:
    """Raise ValueError unless ``ann`` is consistent with ``text``."""
    if ann.span.end > len(text):
        raise ValueError(f"span {ann.span} exceeds text length {len(text)}")
    if text[ann.span.start:ann.span.end] != ann.surface:
        raise ValueError(f"surface {ann.surface!r} does not match text at {ann.span}")


@dataclass(frozen=True)
class Message:
    id: str
    text: str
    platform: Platform = Platform.GENERIC
    account: str = ""
    account_kind: AccountKind = AccountKind.UNKNOWN
    is_reply: bool = False
    is_repost: bool = False
    lang_hint: Optional[str] = None
    created_at: Optional[datetime] = field(default=None, compare=True)

    def __post_init__(self):
        from .tokenizer import normalize

        text = normalize(self.text)
        if text is not self.text:
            object.__setattr__(self, "text", text)
        if not isinstance(self.platform, Platform):
            object.__setattr__(self, "platform", Platform(self.platform))
        if not isinstance(self.account_kind, AccountKind):
            object.__setattr__(self, "account_kind", AccountKind(self.account_kind))
        if text.startswith("@") and not self.is_reply:
            object.__setattr__(self, "is_reply", True)
