"""Text normalization and tokenization for short social-media messages.

``segment`` tiles the text: every character belongs to exactly one token,
token boundaries always fall on extended grapheme cluster boundaries, and
concatenating the token surfaces gives back the input.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional

import regex

from .model import Span


def normalize(raw: str) -> str:
    """Compose to NFC and collapse CRLF/CR line endings to LF.

    Returns ``raw`` itself when it is already normalized.
    """
    text = raw
    if "\r" in text:
        text = text.replace("\r\n", "\n").replace("\r", "\n")
    if not text.isascii() and not unicodedata.is_normalized("NFC", text):
        text = unicodedata.normalize("NFC", text)
    return text


class TokenKind(str, enum.Enum):
    WORD = "Word"
    PUNCT_RUN = "PunctRun"
    EMOJI_RUN = "EmojiRun"
    EMOTICON = "Emoticon"
    DELIMITED = "DelimitedExpr"
    URL = "Url"
    MENTION = "Mention"
    HASHTAG = "Hashtag"
    NUMBER = "Number"
    WHITESPACE = "Whitespace"
    OTHER = "Other"


@dataclass(frozen=True)
class Token:
    span: Span
    kind: TokenKind
    surface: str

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    @property
    def inner(self) -> str:
        """Body of a delimited expression without its wrapping characters."""
        if self.kind is TokenKind.DELIMITED:
            return self.surface[1:-1]
        return self.surface


# Bare domains ("4sq.com/1x53idj") are only recognized with one of these
# top-level domains, so "Best.Day.Ever" stays three words.
TLDS = (
    "com net org edu gov mil int info biz name pro mobi app dev io co ly me gl be us uk ca au de fr es it nl "
    "ru jp cn in br mx tv fm gg ai to sh so vc ws la cc tk ie nz za se no fi dk ch at pl pt gr tr kr tw hk sg "
    "ph id my th vn ar cl pe ve eu asia xyz online site shop store news blog live link click"
).split()

_TRAILING_URL_PUNCT = ".,;:!?)]}'\"…”’»"

# First characters that can open an emoji cluster. Pictographs below U+2300
# (©, ®, ™, ‼, arrows) only count when followed by VS16.
EMOJI_START = (
    r"(?:\p{Emoji_Presentation}|\p{RI}|[\p{ExtPict}--\x00-\u22FF]"
    r"|[\p{ExtPict}#*0-9]\uFE0F|[#*0-9]\u20E3)"
)
EMOJI_CLUSTER = r"(?=" + EMOJI_START + r")\X"

_INNER = r"[\p{L}\p{M}](?:[\p{L}\p{M}'’\- ]*[\p{L}\p{M}])?"
_NOT_ALNUM_BEFORE = r"(?<![\p{L}\p{M}\p{N}])"
_NOT_ALNUM_AFTER = r"(?![\p{L}\p{M}\p{N}])"

URL_PATTERN = (
    r"(?:https?|ftp)://\S+"
    r"|www\.[\p{L}\p{N}-]+\.\S+"
    r"|" + _NOT_ALNUM_BEFORE + r"[\w.+-]+@[\w-]+(?:\.[\w-]+)+"
    r"|(?<![\w.@/-])(?:[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?\.)+(?i:" + "|".join(TLDS) + r")"
    r"(?![\w-])(?:/\S*)?"
)


def load_emoticons() -> list[str]:
    text = resources.files("tplcoder").joinpath("data").joinpath("emoticons.txt").read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def _emoticon_pattern(emoticons: Iterable[str]) -> str:
    forms = sorted(set(emoticons), key=lambda s: (-len(s), s))
    body = "|".join(regex.escape(f) for f in forms)
    # ":)))" and ":(((" are the same face with a longer mouth
    return (_NOT_ALNUM_BEFORE + r"(?:" + body + r")(?:(?<=\))\)+|(?<=\()\(+)?" + _NOT_ALNUM_AFTER)


@lru_cache(maxsize=4)
def _master(split_hashtags: bool, emoticons: tuple[str, ...]) -> regex.Pattern:
    emoticon = _emoticon_pattern(emoticons)
    delimited = (
        _NOT_ALNUM_BEFORE + r"(?:\*" + _INNER + r"\*|\(" + _INNER + r"\))" + _NOT_ALNUM_AFTER
    )
    mention = r"(?<![\w@])@\w+"
    hashtag = r"(?<![\w#&])#(?=\w*[^\W\d_])(?>\w+)(?![#$%^&*@])"
    picto = r"</?3+" + r"(?![\p{N}])"
    # a punctuation run stops where a higher-priority token could begin
    stop = "(?:" + "|".join([delimited, emoticon, picto, mention] + ([] if split_hashtags else [hashtag])) + ")"
    branches = [
        ("ws", r"\s+"),
        ("url", URL_PATTERN),
        ("mention", mention),
    ]
    if not split_hashtags:
        branches.append(("hashtag", hashtag))
    branches += [
        ("delim", delimited),
        ("emoticon", emoticon),
        ("picto", picto),
        ("emoji", r"(?:" + EMOJI_CLUSTER + r")+"),
        ("number", r"\d+(?:[.,:/]\d+)*" + r"(?![\p{L}\p{M}\p{N}_'’\-])"),
        ("word", r"[\p{L}\p{M}\p{N}_]+(?:[\-'’][\p{L}\p{M}\p{N}_]+)*"),
        ("punct", r"(?:(?!" + stop + r")(?!" + EMOJI_START + r")[\p{P}\p{S}])+"),
        ("other", r"\X"),
    ]
    src = "|".join(f"(?P<{name}>{pat})" for name, pat in branches)
    return regex.compile(src, regex.V1)


_KINDS = {
    "ws": TokenKind.WHITESPACE,
    "url": TokenKind.URL,
    "mention": TokenKind.MENTION,
    "hashtag": TokenKind.HASHTAG,
    "delim": TokenKind.DELIMITED,
    "emoticon": TokenKind.EMOTICON,
    "picto": TokenKind.OTHER,
    "emoji": TokenKind.EMOJI_RUN,
    "number": TokenKind.NUMBER,
    "word": TokenKind.WORD,
    "punct": TokenKind.PUNCT_RUN,
    "other": TokenKind.OTHER,
}

_DEFAULT_EMOTICONS: Optional[tuple[str, ...]] = None


def default_emoticons() -> tuple[str, ...]:
    global _DEFAULT_EMOTICONS
    if _DEFAULT_EMOTICONS is None:
        _DEFAULT_EMOTICONS = tuple(load_emoticons())
    return _DEFAULT_EMOTICONS


_CLUSTER = regex.compile(r"\X")
_HAS_LETTER = regex.compile(r"[\p{L}\p{M}]")


def grapheme_boundaries(text: str) -> set[int]:
    """Offsets at which an extended grapheme cluster starts, plus ``len(text)``."""
    if text.isascii() and "\r\n" not in text:
        return set(range(len(text) + 1))
    bounds = {m.start() for m in _CLUSTER.finditer(text)}
    bounds.add(len(text))
    return bounds


def segment(text: str, *, split_hashtags: bool = False,
            emoticons: Optional[Iterable[str]] = None) -> list[Token]:
    """Split normalized ``text`` into a tiling list of typed tokens."""
    pattern = _master(split_hashtags, default_emoticons() if emoticons is None else tuple(emoticons))
    pieces: list[tuple[int, int, TokenKind]] = []
    pos, n = 0, len(text)
    while pos < n:
        m = pattern.match(text, pos)
        kind_name = m.lastgroup
        end = m.end()
        if kind_name == "url":
            stripped = m.group().rstrip(_TRAILING_URL_PUNCT)
            if stripped:
                end = pos + len(stripped)
        elif kind_name == "word" and not _HAS_LETTER.search(m.group()):
            kind_name = "number"
        pieces.append((pos, end, _KINDS[kind_name]))
        pos = end
    if not text.isascii():
        pieces = _snap_to_clusters(pieces, grapheme_boundaries(text))
    return [Token(Span(s, e), k, text[s:e]) for s, e, k in pieces]


def _snap_to_clusters(pieces, bounds):
    out: list[tuple[int, int, TokenKind]] = []
    for s, e, k in pieces:
        if out and s not in bounds:
            ps, _, pk = out[-1]
            out[-1] = (ps, e, pk)
        else:
            out.append((s, e, k))
    return out


def is_emoji_cluster(cluster: str) -> bool:
    return _EMOJI_CLUSTER_RE.fullmatch(cluster) is not None


_EMOJI_CLUSTER_RE = regex.compile(EMOJI_CLUSTER, regex.V1)


def emoji_clusters(run: str) -> list[tuple[int, str]]:
    """(offset, cluster) pairs for each grapheme cluster in an emoji run."""
    return [(m.start(), m.group()) for m in _CLUSTER.finditer(run)]
