"""JSON-lines message records, validity screening and sampling modes."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from datetime import datetime
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

import regex

from .model import AccountKind, Message, Platform, Validity
from .tokenizer import URL_PATTERN

REQUIRED = ("id", "text")
OPTIONAL = ("platform", "account", "account_kind", "is_reply", "is_repost", "lang", "created_at")


class RecordError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_record(line: Union[str, bytes], lineno: Optional[int] = None) -> Message:
    """Parse one JSON object into a :class:`Message`."""
    if isinstance(line, bytes):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise RecordError(f"invalid UTF-8 at byte {exc.start}", lineno) from None
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordError(f"malformed JSON: {exc.msg}", lineno) from None
    return parse_object(obj, lineno)


def parse_object(obj, lineno: Optional[int] = None) -> Message:
    if not isinstance(obj, dict):
        raise RecordError("record must be a JSON object", lineno)
    for key in REQUIRED:
        if key not in obj:
            raise RecordError(f"missing required field {key!r}", lineno)
    if not isinstance(obj["text"], str):
        raise RecordError("field 'text' must be a string", lineno)
    try:
        created = obj.get("created_at")
        return Message(
            id=str(obj["id"]),
            text=obj["text"],
            platform=Platform(obj.get("platform") or "generic"),
            account=str(obj.get("account") or ""),
            account_kind=AccountKind(obj.get("account_kind") or "unknown"),
            is_reply=_flag(obj.get("is_reply", False)),
            is_repost=_flag(obj.get("is_repost", False)),
            lang_hint=obj.get("lang") or None,
            created_at=datetime.fromisoformat(created) if created else None,
        )
    except (ValueError, TypeError) as exc:
        raise RecordError(str(exc), lineno) from None


def _flag(value) -> bool:
    if isinstance(value, bool):
        return value
    raise TypeError(f"expected a boolean, got {value!r}")


def record_dict(message: Message) -> dict:
    d = {
        "id": message.id,
        "text": message.text,
        "platform": message.platform.value,
        "account": message.account,
        "account_kind": message.account_kind.value,
        "is_reply": message.is_reply,
        "is_repost": message.is_repost,
    }
    if message.lang_hint is not None:
        d["lang"] = message.lang_hint
    if message.created_at is not None:
        d["created_at"] = message.created_at.isoformat()
    return d


def dumps(obj: dict) -> str:
    """Canonical JSON used for every output line."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def serialize_record(message: Message, validity: Optional[Validity] = None) -> str:
    d = record_dict(message)
    if validity is not None:
        d["validity"] = validity.value
    return dumps(d)


def read_records(lines: Iterable[Union[str, bytes]]) -> Iterator[tuple[int, Union[Message, RecordError]]]:
    """Yield ``(line number, Message or RecordError)``; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_record(line, lineno)
        except RecordError as err:
            yield lineno, err


# -- validity -------------------------------------------------------------------

def _data(name: str, directory: Optional[Path]) -> str:
    if directory is not None and (directory / name).exists():
        return (directory / name).read_text(encoding="utf-8")
    return resources.files("tplcoder").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def _lines(text: str) -> list[str]:
    return [l.strip() for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]


@dataclass(frozen=True)
class ValidityHeuristics:
    bot_patterns: tuple[regex.Pattern, ...]
    strong_spam: frozenset[str]
    weak_spam: frozenset[str]
    function_words: frozenset[str]
    spam_min_hits: int = 2
    spam_min_density: float = 0.25
    spam_max_urls: int = 3
    min_words_for_language: int = 6
    min_function_ratio: float = 0.05
    max_non_latin_ratio: float = 0.5
    precedence: tuple[Validity, ...] = (Validity.NON_ENGLISH, Validity.BOT, Validity.SPAM)


def load_heuristics(directory: Union[str, Path, None] = None, **overrides) -> ValidityHeuristics:
    d = Path(directory) if directory is not None else None
    bots = tuple(regex.compile(p, regex.IGNORECASE) for p in _lines(_data("bot_templates.txt", d)))
    strong, weak = set(), set()
    for line in _lines(_data("spam_terms.txt", d)):
        tier, term = line.split(None, 1)
        if tier not in ("strong", "weak"):
            raise ValueError(f"spam_terms.txt: unknown tier {tier!r}")
        (strong if tier == "strong" else weak).add(term.lower())
    words = frozenset(w.lower() for line in _lines(_data("function_words.txt", d)) for w in line.split())
    return ValidityHeuristics(bots, frozenset(strong), frozenset(weak), words, **overrides)


_DEFAULT_HEURISTICS: Optional[ValidityHeuristics] = None


def default_heuristics() -> ValidityHeuristics:
    global _DEFAULT_HEURISTICS
    if _DEFAULT_HEURISTICS is None:
        _DEFAULT_HEURISTICS = load_heuristics()
    return _DEFAULT_HEURISTICS


_REPOST_PREFIX = regex.compile(r"^RT\s+@\w+:?\s*")
_URL = regex.compile(URL_PATTERN, regex.V1)
_LATIN = regex.compile(r"[\p{Alphabetic}&&\p{Script=Latin}]", regex.V1)
_LETTERS = regex.compile(r"\p{Alphabetic}")
_WORD = regex.compile(r"[\p{L}\p{N}][\p{L}\p{N}'’%]*")


def _is_bot(text: str, h: ValidityHeuristics) -> bool:
    return any(p.search(text) for p in h.bot_patterns)


def _is_spam(text: str, h: ValidityHeuristics) -> bool:
    if len(_URL.findall(text)) >= h.spam_max_urls:
        return True
    words = [w.lower() for w in _WORD.findall(_URL.sub(" ", text))]
    if not words:
        return False
    strong = sum(w in h.strong_spam for w in words)
    hits = strong + sum(w in h.weak_spam for w in words)
    return strong >= 1 and hits >= h.spam_min_hits and hits / len(words) >= h.spam_min_density


def _is_non_english(message: Message, text: str, h: ValidityHeuristics) -> bool:
    hint = (message.lang_hint or "").lower()
    if hint and hint not in ("und", "unknown"):
        return not hint.startswith("en")
    letters = len(_LETTERS.findall(text))
    if letters and 1 - len(_LATIN.findall(text)) / letters >= h.max_non_latin_ratio:
        return True
    words = [w.lower() for w in _WORD.findall(_URL.sub(" ", text)) if not w.isdigit()]
    if len(words) >= h.min_words_for_language:
        ratio = sum(w in h.function_words for w in words) / len(words)
        return ratio < h.min_function_ratio
    return False


def classify_validity(message: Message, heuristics: Optional[ValidityHeuristics] = None) -> Validity:
    """Screen out non-English, automated and spam messages.

    A repost of a bot message counts as an ordinary message; a repost of
    spam is still spam.
    """
    h = heuristics or default_heuristics()
    text = message.text
    stripped = _REPOST_PREFIX.sub("", text)
    repost = message.is_repost or stripped != text
    checks = {
        Validity.NON_ENGLISH: lambda: _is_non_english(message, stripped, h),
        Validity.BOT: lambda: not repost and _is_bot(stripped, h),
        Validity.SPAM: lambda: _is_spam(stripped, h),
    }
    for verdict in h.precedence:
        if checks[verdict]():
            return verdict
    return Validity.VALID


# -- sampling -------------------------------------------------------------------

class SamplingMode(str, enum.Enum):
    BRAND_POSTS = "brand"
    AT_REPLIES_ONLY = "at-replies"
    ALL = "all"


def select(messages: Iterable[Message], mode: SamplingMode) -> list[Message]:
    mode = SamplingMode(mode)
    if mode is SamplingMode.BRAND_POSTS:
        return [m for m in messages if not (m.is_reply or m.is_repost)]
    if mode is SamplingMode.AT_REPLIES_ONLY:
        return [m for m in messages if m.is_reply and not m.is_repost]
    return list(messages)
