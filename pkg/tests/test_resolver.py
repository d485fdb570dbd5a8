import pytest

from tplcoder.detectors import DetectorConfig, detect_all
from tplcoder.engine import annotate
from tplcoder.model import Annotation, Category, Message, Span
from tplcoder.resolver import InlineParseError, parse_inline, render_inline, resolve


def summary(anns):
    return [(a.category.value, a.surface) for a in anns]


def test_same_emoji_collapses():
    assert summary(annotate("✨✨✨✨✨")) == [("A", "✨✨✨✨✨")]
    assert summary(annotate("✨ ✨ ✨ ✨ ✨")) == [("A", "✨ ✨ ✨ ✨ ✨")]


def test_skin_tone_variants_are_the_same_emoji():
    assert len(annotate("👍👍🏽👍🏿")) == 1


def test_distinct_emoji_stay_separate():
    assert summary(annotate("😊🐼")) == [("VK", "😊"), ("VK", "🐼")]
    assert summary(annotate("🔥✨🔥")) == [("A", "🔥"), ("A", "✨"), ("A", "🔥")]


def test_collapse_across_spaces_can_be_disabled():
    cfg = DetectorConfig(collapse_emoji_across_spaces=False)
    assert len(annotate("✨ ✨ ✨", cfg)) == 3
    assert len(annotate("✨✨✨", cfg)) == 1


def test_multi_label_kept():
    anns = annotate("hmmm hmmm hmmm hmmm hmmm")
    assert summary(anns) == [("VQ", "hmmm hmmm hmmm hmmm hmmm"), ("VS", "hmmm hmmm hmmm hmmm hmmm")]


def test_link_ellipsis_suppressed():
    assert annotate("big news... http://example.com") == []
    assert annotate("big news.... http://example.com") == []
    assert summary(annotate("big news.... really")) == [("VQ", "....")]


def test_truncation_ellipsis_depends_on_platform_limit():
    text = "We tried every flavor on the menu today and the team picked a favorite for the new season, " \
           "so come by the local store and taste it with us...."
    assert len(text) >= 140
    assert annotate(Message("1", text, platform="twitter")) == []
    assert summary(annotate(Message("1", text, platform="facebook"))) == [("VQ", "....")]


def test_same_category_overlap_keeps_longest():
    text = "abcdef"
    a = Annotation(Span(0, 4), Category.VQ, "Tempo", "abcd")
    b = Annotation(Span(2, 6), Category.VQ, "Stress", "cdef")
    c = Annotation(Span(0, 6), Category.VQ, "Pitch", "abcdef")
    assert resolve(text, [a, b, c]) == [c]
    assert resolve(text, [b, a]) == [a]  # equal length: leftmost wins


def test_exact_duplicates_removed():
    a = Annotation(Span(0, 2), Category.VQ, "Emphasis", "!!")
    assert resolve("!!", [a, a]) == [a]


def test_ellipsis_suppression_only_touches_ellipses():
    text = "wow!!! lol.... http://example.com"
    on = resolve(text, detect_all(text))
    off = resolve(text, detect_all(text), DetectorConfig(suppress_link_ellipsis=False))
    assert set(off) - set(on) == {a for a in off if a.rule_id == "VQ.tempo.ellipsis"}
    assert set(on) <= set(off)


@pytest.mark.parametrize("text,markup", [
    ("", "{VQ}{/VQ}"),
    ("*sigh*", "{VS}*sigh*{/VS}"),
    ("hmmm hmmm hmmm hmmm hmmm", "{VQ}{VS}hmmm hmmm hmmm hmmm hmmm{/VS}{/VQ}"),
])
def test_render_examples(text, markup):
    assert render_inline(text, annotate(text)) == markup


def test_parse_examples():
    text, anns = parse_inline("{VS}*sigh*{/VS}")
    assert text == "*sigh*" and [(a.category, a.span) for a in anns] == [(Category.VS, Span(0, 6))]
    assert parse_inline("no tags") == ("no tags", [])
    assert parse_inline("set {x} here")[0] == "set {x} here"


@pytest.mark.parametrize("bad,offset", [("{VQ}oops", 0), ("a{/VS}", 1), ("{VQ}a{/VS}", 5), ("{ZZ}a{/ZZ}", 0)])
def test_parse_errors(bad, offset):
    with pytest.raises(InlineParseError) as err:
        parse_inline(bad)
    assert err.value.offset == offset


def test_crossing_spans_are_split():
    text = "abcdef"
    a = Annotation(Span(0, 4), Category.VQ, None, "abcd")
    b = Annotation(Span(2, 6), Category.VS, None, "cdef")
    out = render_inline(text, [a, b])
    assert out == "{VQ}ab{VS}cd{/VS}{/VQ}{VS}ef{/VS}"
    assert parse_inline(out)[0] == text
