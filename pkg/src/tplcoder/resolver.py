"""Overlap resolution and the ``{CODE}...{/CODE}`` inline markup."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

import regex

from .detectors import DetectorConfig
from .lexicons import emoji_key
from .model import Annotation, Category, Message, Platform, Span, annotate_span
from .tokenizer import URL_PATTERN, emoji_clusters

_LINK_AFTER = regex.compile(r"\s*(?:" + URL_PATTERN + r")", regex.V1)


def _text(message: Union[Message, str]) -> str:
    return message.text if isinstance(message, Message) else message


def _platform(message: Union[Message, str]) -> Platform:
    return message.platform if isinstance(message, Message) else Platform.GENERIC


def _emoji_identity(surface: str) -> Optional[str]:
    keys = {emoji_key(c) for _, c in emoji_clusters(surface) if not c.isspace()}
    return keys.pop() if len(keys) == 1 else None


def _collapse_emoji(anns: list[Annotation], text: str, across_spaces: bool) -> list[Annotation]:
    emoji = sorted((a for a in anns if a.subtype == "Emoji"), key=lambda a: (a.category.rank, a.start))
    rest = [a for a in anns if a.subtype != "Emoji"]
    out: list[Annotation] = []
    for a in emoji:
        if out:
            prev = out[-1]
            gap = text[prev.end:a.start]
            joinable = gap == "" or (across_spaces and gap.isspace())
            key = _emoji_identity(a.surface)
            if (joinable and prev.category is a.category and prev.start <= a.start
                    and key is not None and key == _emoji_identity(prev.surface)):
                out[-1] = annotate_span(text, prev.start, a.end, a.category, "Emoji", prev.rule_id)
                continue
        out.append(a)
    return rest + out


def _suppress_ellipses(anns: list[Annotation], message, config: DetectorConfig) -> list[Annotation]:
    text = _text(message)
    limit = config.char_limit(_platform(message))
    out = []
    for a in anns:
        if a.rule_id == "VQ.tempo.ellipsis":
            if (config.suppress_link_ellipsis and text[:a.start].strip()
                    and _LINK_AFTER.match(text, a.end)):
                continue
            if (config.suppress_truncated_ellipsis and limit and len(text) >= limit
                    and not text[a.end:].strip()):
                continue
        out.append(a)
    return out


def _longest_per_category(anns: list[Annotation]) -> list[Annotation]:
    kept: list[Annotation] = []
    order = sorted(anns, key=lambda a: (-len(a.span), a.start) + a.sort_key()[1:])
    for a in order:
        if any(k.category is a.category and (k.span == a.span or k.span.overlaps(a.span)) for k in kept):
            continue
        kept.append(a)
    return kept


def resolve(message: Union[Message, str], candidates: Iterable[Annotation],
            config: Optional[DetectorConfig] = None) -> list[Annotation]:
    """Apply the coding notes to raw detector candidates.

    Repeated emoji collapse, link and truncation ellipses drop out,
    same-category overlaps keep the longest span (leftmost on ties), and
    different categories on the same span all survive.
    """
    config = config or DetectorConfig()
    text = _text(message)
    anns = sorted(set(candidates), key=Annotation.sort_key)
    # each pass only merges or drops, so this settles quickly
    while True:
        step = _collapse_emoji(anns, text, config.collapse_emoji_across_spaces)
        step = _suppress_ellipses(step, message, config)
        step = sorted(set(_longest_per_category(step)), key=Annotation.sort_key)
        if step == anns:
            return anns
        anns = step


# -- inline markup ---------------------------------------------------------------

_TAG = regex.compile(r"\{(/?)([A-Z]{1,3})\}")


class InlineParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


def render_inline(message: Union[Message, str], annotations: Sequence[Annotation]) -> str:
    """Insert ``{CODE}``/``{/CODE}`` tags; VQ nests outermost on shared spans.

    Crossing spans are closed and reopened at the boundary, so the markup
    stays well nested.
    """
    text = _text(message)
    anns = sorted(annotations, key=lambda a: (a.start, -a.end, a.category.rank))
    opens: dict[int, list[Annotation]] = {}
    points = {0, len(text)}
    for a in anns:
        opens.setdefault(a.start, []).append(a)
        points.update((a.start, a.end))
    out: list[str] = []
    stack: list[Annotation] = []
    prev = 0
    for pos in sorted(points):
        out.append(text[prev:pos])
        prev = pos
        # close everything ending here, reopening crossing ones afterwards
        reopen: list[Annotation] = []
        while any(a.end == pos for a in stack):
            top = stack.pop()
            out.append("{/" + top.category.value + "}")
            if top.end != pos:
                reopen.append(top)
        for a in reversed(reopen):
            out.append("{" + a.category.value + "}")
            stack.append(a)
        for a in opens.get(pos, []):
            out.append("{" + a.category.value + "}")
            if a.end == pos:
                out.append("{/" + a.category.value + "}")
            else:
                stack.append(a)
    out.append(text[prev:])
    return "".join(out)


def parse_inline(marked_up: str) -> tuple[str, list[Annotation]]:
    """Strip tags and return the plain text with category-only annotations."""
    plain: list[str] = []
    length = 0
    stack: list[tuple[Category, int, int]] = []
    spans: list[tuple[int, int, Category]] = []
    pos = 0
    for m in _TAG.finditer(marked_up):
        chunk = marked_up[pos:m.start()]
        plain.append(chunk)
        length += len(chunk)
        pos = m.end()
        closing, code = m.group(1), m.group(2)
        try:
            category = Category(code)
        except ValueError:
            raise InlineParseError(f"unknown tag {m.group()!r}", m.start()) from None
        if not closing:
            stack.append((category, length, m.start()))
            continue
        if not stack or stack[-1][0] is not category:
            raise InlineParseError(f"unbalanced closing tag {m.group()!r}", m.start())
        _, start, _ = stack.pop()
        spans.append((start, length, category))
    if stack:
        category, _, where = stack[-1]
        raise InlineParseError(f"unclosed tag {{{category.value}}}", where)
    plain.append(marked_up[pos:])
    text = "".join(plain)
    anns = [Annotation(Span(s, e), c, None, text[s:e], None, "inline") for s, e, c in spans]
    return text, sorted(anns, key=Annotation.sort_key)
