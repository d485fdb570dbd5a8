"""Externalized word lists and the emoji classification map.

Lexicon files hold one entry per line::

    <CATEGORY> <MATCH_MODE> <canonical...>

``MATCH_MODE`` is ``exact``, ``elongatable`` or ``multiword``. A canonical
written as ``*hugs*`` only matches inside ``*...*`` or ``(...)``; plain
canonicals match bare words and delimited ones. Lines starting with ``#``
are comments.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

from .model import Category


class LexiconError(ValueError):
    def __init__(self, message: str, source: str = "<string>", line: Optional[int] = None):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


class MatchMode(str, enum.Enum):
    EXACT = "exact"
    ELONGATABLE = "elongatable"
    MULTIWORD = "multiword"


@dataclass(frozen=True)
class LexiconEntry:
    canonical: str
    category: Category
    match_mode: MatchMode
    allow_delimited: bool = True
    bare: bool = True

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.canonical.split(" "))


def _runs(word: str) -> tuple[tuple[str, int], ...]:
    return tuple((ch, len(list(g))) for ch, g in itertools.groupby(word))


def _period(seq: Sequence) -> int:
    """Length of the shortest unit that tiles ``seq`` exactly."""
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and all(seq[i] == seq[i % p] for i in range(n)):
            return p
    return n


@dataclass(frozen=True)
class _Elongation:
    entry: LexiconEntry
    unit: tuple[tuple[str, int], ...]
    repeats: int

    def matches(self, runs: Sequence[tuple[str, int]]) -> bool:
        k = len(self.unit)
        if self.repeats == 1 and len(runs) != k:
            return False
        if len(runs) < self.repeats * k:
            return False
        # repeated units may trail off mid-unit ("hahah")
        return all(ch == self.unit[i % k][0] and count >= self.unit[i % k][1]
                   for i, (ch, count) in enumerate(runs))


class Lexicon:
    """Immutable collection of entries with case-insensitive lookup."""

    def __init__(self, entries: Iterable[LexiconEntry] = (), source: str = "<memory>"):
        self._entries: tuple[LexiconEntry, ...] = tuple(entries)
        self.source = source
        self._exact: dict[str, list[LexiconEntry]] = {}
        self._elong: dict[str, list[_Elongation]] = {}
        self._multi: dict[str, list[LexiconEntry]] = {}
        self._derived: dict[object, "Lexicon"] = {}
        self._memo: dict[tuple[str, bool], Optional[LexiconEntry]] = {}
        self._categories = frozenset(e.category for e in self._entries)
        self._max_words = max((len(e.words) for e in self._entries if e.match_mode is MatchMode.MULTIWORD),
                              default=1)
        seen = set()
        for e in self._entries:
            key = (e.category, e.canonical)
            if key in seen:
                raise LexiconError(f"duplicate entry {e.category.value} {e.canonical!r}", source)
            seen.add(key)
            if e.match_mode is MatchMode.MULTIWORD:
                self._multi.setdefault(e.words[0], []).append(e)
            elif e.match_mode is MatchMode.EXACT:
                self._exact.setdefault(e.canonical, []).append(e)
            else:
                runs = _runs(e.canonical)
                p = _period(runs)
                unit = runs[:p]
                skeleton = "".join(ch for ch, _ in unit)
                self._elong.setdefault(skeleton, []).append(_Elongation(e, unit, len(runs) // p))

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, canonical: str) -> bool:
        return any(e.canonical == canonical for e in self._entries)

    @property
    def entries(self) -> tuple[LexiconEntry, ...]:
        return self._entries

    @property
    def max_phrase_words(self) -> int:
        return self._max_words

    def restrict(self, category: Category) -> "Lexicon":
        if self._categories <= {category}:
            return self
        if category not in self._derived:
            self._derived[category] = Lexicon((e for e in self._entries if e.category is category), self.source)
        return self._derived[category]

    def merged(self, other: "Lexicon") -> "Lexicon":
        key = ("merged", id(other))
        if key not in self._derived:
            self._derived[key] = Lexicon(self._entries + other._entries, f"{self.source}+{other.source}")
        return self._derived[key]

    def lookup(self, word: str, delimited: bool = False) -> Optional[LexiconEntry]:
        key = (word.lower(), delimited)
        try:
            return self._memo[key]
        except KeyError:
            pass
        if len(self._memo) > 50_000:
            self._memo.clear()
        entry = self._memo[key] = self._lookup(*key)
        return entry

    def _lookup(self, w: str, delimited: bool) -> Optional[LexiconEntry]:
        for e in self._exact.get(w, ()):
            if _usable(e, delimited):
                return e
        runs = _runs(w)
        if not runs:
            return None
        letters = [ch for ch, _ in runs]
        # "hahah" has no exact period; fall back to trimmed prefixes
        for cut in range(0, min(3, len(letters))):
            head = letters[:len(letters) - cut]
            skeleton = "".join(head[:_period(head)])
            best = None
            for cand in self._elong.get(skeleton, ()):
                if (cut == 0 or cand.repeats > 1) and _usable(cand.entry, delimited) and cand.matches(runs):
                    if best is None or len(cand.entry.canonical) > len(best.canonical):
                        best = cand.entry
            if best is not None:
                return best
        return None

    def lookup_phrase(self, words: Sequence[str], delimited: bool = False) -> Optional[LexiconEntry]:
        """Longest multiword entry equal to a prefix of ``words``."""
        if not words:
            return None
        lowered = [w.lower() for w in words]
        best = None
        for e in self._multi.get(lowered[0], ()):
            n = len(e.words)
            if tuple(lowered[:n]) == e.words and _usable(e, delimited):
                if best is None or n > len(best.words):
                    best = e
        return best


def _usable(e: LexiconEntry, delimited: bool) -> bool:
    return e.allow_delimited if delimited else e.bare


def parse_lexicon(text: str, source: str = "<string>") -> Lexicon:
    entries = []
    seen: dict[tuple[Category, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 3:
            raise LexiconError(f"expected '<CATEGORY> <MATCH_MODE> <canonical>', got {raw!r}", source, lineno)
        try:
            category = Category(parts[0])
        except ValueError:
            raise LexiconError(f"unknown category {parts[0]!r}", source, lineno) from None
        try:
            mode = MatchMode(parts[1])
        except ValueError:
            raise LexiconError(f"unknown match mode {parts[1]!r}", source, lineno) from None
        canonical = " ".join(parts[2:]).lower()
        bare = True
        if len(canonical) > 2 and canonical.startswith("*") and canonical.endswith("*"):
            canonical = canonical[1:-1]
            bare = False
        if (mode is MatchMode.MULTIWORD) != (" " in canonical):
            raise LexiconError(f"match mode {mode.value} does not fit {canonical!r}", source, lineno)
        if (category, canonical) in seen:
            raise LexiconError(
                f"duplicate entry {category.value} {canonical!r} (first on line {seen[category, canonical]})",
                source, lineno)
        seen[category, canonical] = lineno
        entries.append(LexiconEntry(canonical, category, mode, allow_delimited=True, bare=bare))
    return Lexicon(entries, source)


def load_lexicon(path: Union[str, Path]) -> Lexicon:
    path = Path(path)
    return parse_lexicon(path.read_text(encoding="utf-8"), str(path))


def match_word(word: str, lexicon: Lexicon, delimited: bool = False) -> Optional[tuple[LexiconEntry, str]]:
    """Match one word (or a delimited expression's inner text) against ``lexicon``.

    Returns the entry and its canonical form, so ``"ummmm"`` gives
    ``(entry, "umm")``. Whole-token only: ``"summer"`` never matches ``"umm"``.
    """
    if " " in word:
        entry = lexicon.lookup_phrase(word.split(" "), delimited)
        if entry is not None and len(entry.words) == len(word.split(" ")):
            return entry, entry.canonical
        return None
    entry = lexicon.lookup(word, delimited)
    if entry is None:
        return None
    return entry, entry.canonical


# -- emoji classification -------------------------------------------------

_STRIP = {0xFE0F} | set(range(0x1F3FB, 0x1F400))


def emoji_key(cluster: str) -> str:
    return "".join(c for c in cluster if ord(c) not in _STRIP)


class EmojiClassMap(Mapping[str, Category]):
    def __init__(self, table: Mapping[str, Category], source: str = "<memory>"):
        self._table = {emoji_key(k): v for k, v in table.items()}
        self.source = source

    def __getitem__(self, cluster: str) -> Category:
        return self._table[emoji_key(cluster)]

    def __iter__(self):
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)


def parse_emoji_map(text: str, source: str = "<string>") -> EmojiClassMap:
    table: dict[str, Category] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.rsplit(None, 1)
        if len(parts) != 2:
            raise LexiconError(f"expected '<cluster> <CATEGORY>', got {raw!r}", source, lineno)
        cluster, code = parts
        try:
            category = Category(code)
        except ValueError:
            raise LexiconError(f"unknown category {code!r}", source, lineno) from None
        if category not in (Category.TK, Category.VK, Category.A):
            raise LexiconError(f"emoji must map to TK, VK or A, not {code}", source, lineno)
        table[cluster] = category
    return EmojiClassMap(table, source)


def load_emoji_map(path: Union[str, Path]) -> EmojiClassMap:
    path = Path(path)
    return parse_emoji_map(path.read_text(encoding="utf-8"), str(path))


def classify_emoji(cluster: str, emoji_map: Mapping[str, Category]) -> Category:
    """TK for touch, VK for faces/bodies/gestures, A for everything else.

    Clusters missing from the map fall back to their ZWJ components, then to A.
    """
    try:
        return emoji_map[cluster]
    except KeyError:
        pass
    if "\u200d" in cluster:
        found = set()
        for part in cluster.split("\u200d"):
            try:
                found.add(emoji_map[part])
            except KeyError:
                pass
        for category in (Category.TK, Category.VK):
            if category in found:
                return category
    return Category.A


# -- shipped resources ------------------------------------------------------

DEFAULT_FILES = {
    "vocalizations": "vocalizations.lex",
    "tactile": "tactile.lex",
    "visual": "visual.lex",
    "manner": "manner.lex",
    "intonation": "intonation.lex",
}


def _read(directory: Optional[Path], name: str) -> tuple[str, str]:
    if directory is not None and (directory / name).exists():
        p = directory / name
        return p.read_text(encoding="utf-8"), str(p)
    res = resources.files("tplcoder").joinpath("data").joinpath(name)
    return res.read_text(encoding="utf-8"), f"tplcoder/data/{name}"


@dataclass(frozen=True)
class Resources:
    """Every data file the detectors read, loaded once."""

    vocalizations: Lexicon
    tactile: Lexicon
    visual: Lexicon
    manner: Lexicon
    intonation: Lexicon
    emoji_map: EmojiClassMap
    caps_allowlist: frozenset[str]


def load_caps_allowlist_text(text: str) -> frozenset[str]:
    return frozenset(
        line.strip().upper() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")
    )


def load_resources(directory: Union[str, Path, None] = None) -> Resources:
    """Load lexicons from ``directory``, falling back to the shipped files per name."""
    d = Path(directory) if directory is not None else None
    lex = {key: parse_lexicon(*_read(d, name)) for key, name in DEFAULT_FILES.items()}
    emap = parse_emoji_map(*_read(d, "emoji_map.tsv"))
    allow = load_caps_allowlist_text(_read(d, "caps_allowlist.txt")[0])
    return Resources(emoji_map=emap, caps_allowlist=allow, **lex)
