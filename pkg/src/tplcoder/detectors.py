"""Candidate detectors, one per paralanguage category.

Every detector is a pure function over the token stream and returns
unresolved candidates; overlap handling lives in :mod:`tplcoder.resolver`.
"""

from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

import regex

from .lexicons import (
    Lexicon,
    LexiconEntry,
    Resources,
    classify_emoji,
    load_caps_allowlist_text,
    load_resources,
)
from .model import Annotation, Category, Message, Span, annotate_span
from .tokenizer import Token, TokenKind, emoji_clusters, grapheme_boundaries, segment

_DEFAULT_RESOURCES: Optional[Resources] = None


def default_resources() -> Resources:
    global _DEFAULT_RESOURCES
    if _DEFAULT_RESOURCES is None:
        _DEFAULT_RESOURCES = load_resources()
    return _DEFAULT_RESOURCES


def _default_allowlist() -> frozenset[str]:
    return default_resources().caps_allowlist


@dataclass(frozen=True)
class DetectorConfig:
    min_emphasis_run: int = 2
    min_elongation_extra: int = 2
    min_caps_len: int = 3
    caps_allowlist: frozenset[str] = field(default_factory=_default_allowlist)
    rhythm_min_segments: int = 2
    scare_quotes_enabled: bool = True
    scare_quotes_max_words: int = 3
    censorship_symbols: str = "#$%^&*@!"
    spelling_min_hyphens: int = 2
    # knobs beyond the core set
    pitch_min_upper: int = 2
    tempo_min_repeats: int = 3
    min_ellipsis_dots: int = 4
    hashtags_opaque: bool = True
    collapse_emoji_across_spaces: bool = True
    suppress_link_ellipsis: bool = True
    suppress_truncated_ellipsis: bool = True
    char_limit_twitter: int = 140
    char_limit_facebook: int = 0
    char_limit_instagram: int = 0
    char_limit_generic: int = 0

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if f.type == "int" and f.name.startswith("char_limit_"):
                if value < 0:
                    raise ValueError(f"{f.name} must be >= 0")
            elif f.type == "int" and value < 1:
                raise ValueError(f"{f.name} must be >= 1")
        if not isinstance(self.caps_allowlist, frozenset):
            object.__setattr__(self, "caps_allowlist", frozenset(s.upper() for s in self.caps_allowlist))
        if not self.censorship_symbols:
            raise ValueError("censorship_symbols must not be empty")

    def char_limit(self, platform) -> int:
        """Character limit for ``platform``; 0 means unlimited."""
        return getattr(self, f"char_limit_{platform.value}", 0)


_BOOLS = {"1": True, "true": True, "yes": True, "on": True, "0": False, "false": False, "no": False, "off": False}


def parse_config(text: str, base_dir: Union[str, Path, None] = None,
                 caps_allowlist: Optional[frozenset[str]] = None) -> DetectorConfig:
    """Read ``key = value`` lines into a :class:`DetectorConfig`.

    ``caps_allowlist`` in the file names a one-entry-per-line file, relative
    to ``base_dir`` when not absolute; otherwise the ``caps_allowlist``
    argument (or the shipped list) is used.
    """
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",), comment_prefixes=("#",))
    parser.read_string("[detectors]\n" + text)
    known = {f.name: f for f in dataclasses.fields(DetectorConfig)}
    kwargs = {} if caps_allowlist is None else {"caps_allowlist": caps_allowlist}
    for key, raw in parser["detectors"].items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        kind = known[key].type
        if key == "caps_allowlist":
            path = Path(raw)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            kwargs[key] = load_caps_allowlist_text(path.read_text(encoding="utf-8"))
        elif kind == "int":
            kwargs[key] = int(raw)
        elif kind == "bool":
            if raw.lower() not in _BOOLS:
                raise ValueError(f"{key}: expected a boolean, got {raw!r}")
            kwargs[key] = _BOOLS[raw.lower()]
        else:
            kwargs[key] = raw
    return DetectorConfig(**kwargs)


def load_config(path: Union[str, Path], caps_allowlist: Optional[frozenset[str]] = None) -> DetectorConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), path.parent, caps_allowlist)


# -- helpers ------------------------------------------------------------------

def _text_of(tokens: Sequence[Token]) -> str:
    return "".join(t.surface for t in tokens)


def _ann(tokens_text: str, start: int, end: int, category: Category, subtype: str, rule: str,
         canonical: Optional[str] = None) -> Annotation:
    return annotate_span(tokens_text, start, end, category, subtype, rule, canonical)


def _lexicon_hits(tokens: Sequence[Token], lexicon: Lexicon, category: Category, rule: str) -> list[Annotation]:
    """Word, phrase and delimited-expression matches, with repeats merged."""
    hits: list[tuple[int, int, LexiconEntry, bool]] = []
    max_words = lexicon.max_phrase_words
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        if tok.kind is TokenKind.DELIMITED:
            inner = tok.inner
            entry = (lexicon.lookup_phrase(inner.split(" "), delimited=True) if " " in inner
                     else lexicon.lookup(inner, delimited=True))
            if entry is not None and (" " not in inner or len(entry.words) == len(inner.split(" "))):
                hits.append((tok.start, tok.end, entry, inner.lower() != entry.canonical))
            i += 1
            continue
        if tok.kind is not TokenKind.WORD:
            i += 1
            continue
        if max_words > 1:
            # gather following words separated by single spaces
            idx = [i]
            j = i + 1
            while len(idx) < max_words and j + 1 < n and tokens[j].surface == " " and tokens[j + 1].kind is TokenKind.WORD:
                idx.append(j + 1)
                j += 2
            entry = lexicon.lookup_phrase([tokens[k].surface for k in idx])
            if entry is not None:
                last = idx[len(entry.words) - 1]
                hits.append((tok.start, tokens[last].end, entry, False))
                i = last + 1
                continue
        entry = lexicon.lookup(tok.surface)
        if entry is not None:
            hits.append((tok.start, tok.end, entry, tok.surface.lower() != entry.canonical))
        i += 1
    if not hits:
        return []
    text = _text_of(tokens)
    # "hmmm hmmm hmmm" is one element, not three
    merged: list[tuple[int, int, LexiconEntry, bool]] = []
    for h in hits:
        if merged:
            ps, pe, pentry, pel = merged[-1]
            gap = text[pe:h[0]]
            if pentry is h[2] and gap and gap.isspace() and "\n" not in gap:
                merged[-1] = (ps, h[1], pentry, pel or h[3])
                continue
        merged.append(h)
    return [_ann(text, s, e, category, "LexiconEntry", rule, entry.canonical if elongated else None)
            for s, e, entry, elongated in merged]


def _emoji_hits(tokens: Sequence[Token], emoji_map: Mapping[str, Category], category: Category,
                rule: str) -> list[Annotation]:
    if not any(t.kind is TokenKind.EMOJI_RUN for t in tokens):
        return []
    text = _text_of(tokens)
    out = []
    for tok in tokens:
        if tok.kind is not TokenKind.EMOJI_RUN:
            continue
        for offset, cluster in emoji_clusters(tok.surface):
            if classify_emoji(cluster, emoji_map) is category:
                s = tok.start + offset
                out.append(_ann(text, s, s + len(cluster), category, "Emoji", rule))
    return out


# -- voice quality ------------------------------------------------------------

_EMPHASIS = regex.compile(r"[!?¡¿‼⁉⁈⁇]+")
_DOUBLE_MARKS = frozenset("‼⁉⁈⁇")
_ELLIPSIS = regex.compile(r"[.…]+")
_SPELLED = regex.compile(r"\p{L}(?:-\p{L})+")
_SENTENCE_END = frozenset(".!?…")
_LETTER = regex.compile(r"\p{L}")
_APOSTROPHE = regex.compile(r"['’]")
_WORD_BEFORE = regex.compile(r"(\p{L}+)[\s,:]*$")
_SCARE = regex.compile(r"[\"“](?P<body>[^\"“”\n]+)[\"”]")
_REPORTING = frozenset(
    "said says say saying told tells tell asked asks ask wrote writes write replied replies reply "
    "answered answers tweeted tweets posted posts called calls named titled read reads quote quoted "
    "quoting announced announces explained explains added adds shouted yelled whispered".split()
)


def _emphasis(tokens, text, config):
    out = []
    for tok in tokens:
        if tok.kind is not TokenKind.PUNCT_RUN:
            continue
        for m in _EMPHASIS.finditer(tok.surface):
            weight = sum(2 if c in _DOUBLE_MARKS else 1 for c in m.group())
            if weight >= config.min_emphasis_run:
                out.append(_ann(text, tok.start + m.start(), tok.start + m.end(), Category.VQ, "Emphasis",
                                "VQ.emphasis"))
    return out


def _is_spelled(word: str, min_hyphens: int = 1) -> bool:
    return _SPELLED.fullmatch(word) is not None and word.count("-") >= min_hyphens


def _stress(tokens, text, config):
    if not any(c.islower() for c in text):
        return []
    out = []
    for tok in tokens:
        if tok.kind is not TokenKind.WORD or _is_spelled(tok.surface):
            continue
        cased = [c for c in tok.surface if c.isupper() or c.islower()]
        if len(cased) < config.min_caps_len or not all(c.isupper() for c in cased):
            continue
        word = tok.surface.upper()
        base = _APOSTROPHE.split(word)[0]
        if word in config.caps_allowlist or base in config.caps_allowlist:
            continue
        out.append(_ann(text, tok.start, tok.end, Category.VQ, "Stress", "VQ.stress"))
    return out


@lru_cache(maxsize=16)
def _pitch_re(min_upper: int) -> regex.Pattern:
    return regex.compile(r"\p{Ll}\p{Lu}{%d,}\p{Ll}" % min_upper)


@lru_cache(maxsize=16)
def _elong_re(need: int) -> regex.Pattern:
    return regex.compile(r"(\p{L})\1{%d,}" % (need - 1), regex.IGNORECASE)


@lru_cache(maxsize=16)
def _censor_re(symbols: str) -> regex.Pattern:
    return regex.compile(r"[\p{L}" + regex.escape(symbols) + r"]{2,}")


def _pitch(tokens, text, config):
    pat = _pitch_re(config.pitch_min_upper)
    out = []
    for tok in tokens:
        if tok.kind is TokenKind.WORD and tok.surface.upper() not in config.caps_allowlist and pat.search(tok.surface):
            out.append(_ann(text, tok.start, tok.end, Category.VQ, "Pitch", "VQ.pitch"))
    return out


def _rhythm(tokens, text, config):
    """Runs of sentence-initial one-word sentences: "Best. Day. Ever."."""
    out = []
    sig = [t for t in tokens if t.kind is not TokenKind.WHITESPACE]
    prev_ends_sentence = True
    run: list[tuple[int, int]] = []

    def flush():
        if len(run) >= config.rhythm_min_segments:
            out.append(_ann(text, run[0][0], run[-1][1], Category.VQ, "Rhythm", "VQ.rhythm"))
        run.clear()

    for i, tok in enumerate(sig):
        nxt = sig[i + 1] if i + 1 < len(sig) else None
        if (prev_ends_sentence and tok.kind is TokenKind.WORD and nxt is not None
                and nxt.kind is TokenKind.PUNCT_RUN and nxt.surface == "."
                and nxt.start == tok.end and (nxt.end == len(text) or text[nxt.end].isspace())):
            run.append((tok.start, nxt.end))
            continue
        if run and not (tok.kind is TokenKind.PUNCT_RUN and tok.surface == "." and tok.end == run[-1][1]):
            flush()
        prev_ends_sentence = tok.kind is TokenKind.PUNCT_RUN and tok.surface[-1] in _SENTENCE_END
    flush()
    return out


def _tempo(tokens, text, config, elongated_ok):
    out = []
    elong = _elong_re(1 + config.min_elongation_extra)
    for tok in tokens:
        if tok.kind is TokenKind.WORD and elong.search(tok.surface) and elongated_ok(tok.surface):
            out.append(_ann(text, tok.start, tok.end, Category.VQ, "Tempo", "VQ.tempo.elongation"))
        elif tok.kind is TokenKind.PUNCT_RUN:
            for m in _ELLIPSIS.finditer(tok.surface):
                dots = sum(3 if c == "…" else 1 for c in m.group())
                if dots >= config.min_ellipsis_dots:
                    out.append(_ann(text, tok.start + m.start(), tok.start + m.end(), Category.VQ, "Tempo",
                                    "VQ.tempo.ellipsis"))
    # the same word over and over
    words = [t for t in tokens if t.kind is TokenKind.WORD]
    i = 0
    while i < len(words):
        j = i
        while (j + 1 < len(words) and words[j + 1].surface.lower() == words[i].surface.lower()
               and _single_line_gap(text, words[j].end, words[j + 1].start)):
            j += 1
        if j - i + 1 >= config.tempo_min_repeats:
            out.append(_ann(text, words[i].start, words[j].end, Category.VQ, "Tempo", "VQ.tempo.repeat"))
        i = j + 1
    return out


def _single_line_gap(text: str, a: int, b: int) -> bool:
    gap = text[a:b]
    return bool(gap) and gap.isspace() and "\n" not in gap


def _scare_quotes(tokens, text, config):
    if not config.scare_quotes_enabled:
        return []
    blocked = [t.span for t in tokens if t.kind in (TokenKind.URL, TokenKind.MENTION, TokenKind.HASHTAG)]
    out = []
    for m in _SCARE.finditer(text):
        body = m.group("body")
        if body != body.strip() or not _LETTER.search(body):
            continue
        if len(body.split()) > config.scare_quotes_max_words:
            continue
        outside = text[:m.start()] + " " + text[m.end():]
        if not _LETTER.search(outside):
            continue  # the whole message is a quotation
        before = _WORD_BEFORE.search(text[:m.start()])
        if before and before.group(1).lower() in _REPORTING:
            continue
        span = Span(m.start(), m.end())
        if any(span.overlaps(b) for b in blocked):
            continue
        out.append(_ann(text, m.start(), m.end(), Category.VQ, "ScareQuotes", "VQ.scarequotes"))
    return out


def _censorship(tokens, text, config):
    pat = _censor_re(config.censorship_symbols)
    symset = set(config.censorship_symbols)
    blocked = [t.span for t in tokens if t.kind in (TokenKind.URL, TokenKind.MENTION, TokenKind.HASHTAG)]
    out = []
    for m in pat.finditer(text):
        used = [c for c in m.group() if c in symset]
        if len(used) < 2 or len(set(used)) < 2:
            continue
        span = Span(m.start(), m.end())
        if any(span.overlaps(b) for b in blocked):
            continue
        out.append(_ann(text, m.start(), m.end(), Category.VQ, "Censorship", "VQ.censorship"))
    return out


def _lexicon_words(tokens, text, lexicon, subtype, rule):
    out = []
    for tok in tokens:
        if tok.kind is TokenKind.DELIMITED and subtype == "Intensity":
            if lexicon.lookup(tok.inner, delimited=True) is not None:
                out.append(_ann(text, tok.start, tok.end, Category.VQ, subtype, rule))
        elif tok.kind is TokenKind.WORD and lexicon.lookup(tok.surface) is not None:
            out.append(_ann(text, tok.start, tok.end, Category.VQ, subtype, rule))
    # "vell vell" is one element
    merged: list[Annotation] = []
    for a in out:
        if merged and merged[-1].surface.lower() == a.surface.lower() and _single_line_gap(text, merged[-1].end, a.start):
            prev = merged.pop()
            a = _ann(text, prev.start, a.end, Category.VQ, subtype, rule)
        merged.append(a)
    return merged


def detect_voice_quality(tokens: Sequence[Token], message: Union[Message, str, None] = None,
                         config: Optional[DetectorConfig] = None,
                         resources: Optional[Resources] = None) -> list[Annotation]:
    config = config or DetectorConfig()
    res = resources or default_resources()
    text = _text_of(tokens)
    if not text.strip():
        return [_ann(text, 0, 0, Category.VQ, "Silence", "VQ.silence")]
    sound = res.vocalizations.merged(res.tactile).merged(res.visual)

    def elongated_ok(word: str) -> bool:
        entry = sound.lookup(word)
        return entry is None or len(word) > len(entry.canonical)

    out: list[Annotation] = []
    out += _emphasis(tokens, text, config)
    out += _stress(tokens, text, config)
    out += _pitch(tokens, text, config)
    out += _rhythm(tokens, text, config)
    out += _tempo(tokens, text, config, elongated_ok)
    out += _scare_quotes(tokens, text, config)
    out += _censorship(tokens, text, config)
    out += _lexicon_words(tokens, text, res.manner, "Intensity", "VQ.intensity")
    out += _lexicon_words(tokens, text, res.intonation, "Intonation", "VQ.intonation")
    for tok in tokens:
        if tok.kind is TokenKind.WORD and _is_spelled(tok.surface, config.spelling_min_hyphens):
            out.append(_ann(text, tok.start, tok.end, Category.VQ, "Spelling", "VQ.spelling"))
    return out


# -- vocalization, tactile, visual -------------------------------------------

def detect_vocalization(tokens: Sequence[Token], lexicon: Lexicon) -> list[Annotation]:
    return _lexicon_hits(tokens, lexicon.restrict(Category.VS), Category.VS, "VS.lexicon")


def detect_tactile(tokens: Sequence[Token], lexicon: Lexicon, emoji_map: Mapping[str, Category]) -> list[Annotation]:
    return (_lexicon_hits(tokens, lexicon.restrict(Category.TK), Category.TK, "TK.lexicon")
            + _emoji_hits(tokens, emoji_map, Category.TK, "TK.emoji"))


def detect_visual(tokens: Sequence[Token], lexicon: Lexicon, emoji_map: Mapping[str, Category]) -> list[Annotation]:
    emoticons = [t for t in tokens if t.kind is TokenKind.EMOTICON]
    text = _text_of(tokens) if emoticons else ""
    out = [_ann(text, t.start, t.end, Category.VK, "Emoticon", "VK.emoticon") for t in emoticons]
    out += _lexicon_hits(tokens, lexicon.restrict(Category.VK), Category.VK, "VK.lexicon")
    out += _emoji_hits(tokens, emoji_map, Category.VK, "VK.emoji")
    return out


# -- artifact -----------------------------------------------------------------

_PICTO = regex.compile(r"</?3+")
_DECORATIVE = regex.compile(r"[\p{So}--[©®™℠°№℗]]+|~{2,}|={3,}|\*{3,}|_{3,}|-{3,}", regex.V1)
_LIST_LINE = regex.compile(r"(?m)^[ \t]*(?:[-*•·▪▫◦‣⁃➢➤►▶]|\d{1,2}[.)])[ \t]+\S[^\n]*")
_LETTER_SPACED = regex.compile(r"(?<!\S)\p{L}(?: \p{L}){3,}(?!\S)")
_STYLED = regex.compile(r"[\U0001D400-\U0001D7FFＡ-Ｚａ-ｚ]{2,}")


def detect_artifact(tokens: Sequence[Token], emoji_map: Mapping[str, Category]) -> list[Annotation]:
    text = _text_of(tokens)
    out = []
    for tok in tokens:
        if tok.kind is TokenKind.OTHER and _PICTO.fullmatch(tok.surface):
            out.append(_ann(text, tok.start, tok.end, Category.A, "Symbol", "A.picto"))
        elif tok.kind in (TokenKind.PUNCT_RUN, TokenKind.OTHER):
            for m in _DECORATIVE.finditer(tok.surface):
                out.append(_ann(text, tok.start + m.start(), tok.start + m.end(), Category.A, "Symbol",
                                "A.decorative"))
    out += _emoji_hits(tokens, emoji_map, Category.A, "A.emoji")
    lines = list(_LIST_LINE.finditer(text))
    if len(lines) >= 2:
        out.append(_ann(text, lines[0].start(), lines[-1].end(), Category.A, "Formatting", "A.list"))
    for m in _LETTER_SPACED.finditer(text):
        out.append(_ann(text, m.start(), m.end(), Category.A, "Formatting", "A.spacing"))
    for m in _STYLED.finditer(text):
        out.append(_ann(text, m.start(), m.end(), Category.A, "Formatting", "A.typeface"))
    return out


# -- composition ----------------------------------------------------------------

def _snap(anns: list[Annotation], text: str) -> list[Annotation]:
    """Widen sub-token spans so they never cut a grapheme cluster."""
    if text.isascii():
        return anns
    bounds = sorted(grapheme_boundaries(text))
    bset = set(bounds)
    out = []
    for a in anns:
        if a.start in bset and a.end in bset:
            out.append(a)
            continue
        s = max(b for b in bounds if b <= a.start)
        e = min(b for b in bounds if b >= a.end)
        out.append(annotate_span(text, s, e, a.category, a.subtype, a.rule_id, a.canonical))
    return out


def detect_all(message: Union[Message, str], config: Optional[DetectorConfig] = None,
               lexicons: Optional[Resources] = None,
               emoji_map: Optional[Mapping[str, Category]] = None,
               tokens: Optional[Sequence[Token]] = None) -> list[Annotation]:
    """Union of all five detectors, ordered by (start, category)."""
    config = config or DetectorConfig()
    res = lexicons or default_resources()
    emap = emoji_map if emoji_map is not None else res.emoji_map
    text = message.text if isinstance(message, Message) else message
    if tokens is None:
        tokens = segment(text, split_hashtags=not config.hashtags_opaque)
    out = detect_voice_quality(tokens, message, config, res)
    out += detect_vocalization(tokens, res.vocalizations)
    out += detect_tactile(tokens, res.tactile, emap)
    out += detect_visual(tokens, res.visual, emap)
    out += detect_artifact(tokens, emap)
    out = _snap(out, text)
    out.sort(key=Annotation.sort_key)
    return out
