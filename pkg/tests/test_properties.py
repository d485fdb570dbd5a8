from hypothesis import assume, given, settings
from hypothesis import strategies as st

from corpora import PROSE_WORDS, TPL_BITS
from tplcoder.detectors import detect_all
from tplcoder.engine import annotate
from tplcoder.model import CATEGORY_ORDER, Annotation, Message, Span, Validity
from tplcoder.resolver import parse_inline, render_inline, resolve
from tplcoder.stats import AnnotatedMessage, StatsReport, StatsRow, accumulate, build_report, fmt_pct, merge, percent
from tplcoder.tokenizer import grapheme_boundaries, normalize, segment

N = settings(max_examples=1000)

ODD = ["́", "‍", "️", "🏽", "🇺🇸", "👨‍👩‍👧", "é", "ß", "…", "“", "”", "’", "\t", "\r\n", "ｆｕｌｌ", "𝐁"]
fragments = st.sampled_from(list(TPL_BITS) + PROSE_WORDS[:40] + ODD + [" ", " ", "\n", "!", "?", ".", "*", "(", ")"])
texts = st.one_of(
    st.lists(fragments, max_size=12).map("".join),
    st.lists(fragments, max_size=12).map(" ".join),
    st.text(max_size=30),
).map(normalize)


@N
@given(texts)
def test_tokens_tile_and_respect_clusters(text):
    toks = segment(text)
    assert "".join(t.surface for t in toks) == text
    bounds = grapheme_boundaries(text)
    pos = 0
    for t in toks:
        assert t.start == pos and t.end > t.start and t.start in bounds
        pos = t.end
    assert pos == len(text)


@N
@given(texts)
def test_annotations_in_bounds_and_cluster_safe(text):
    bounds = grapheme_boundaries(text)
    for a in annotate(text):
        assert 0 <= a.start <= a.end <= len(text)
        assert text[a.start:a.end] == a.surface
        assert a.start in bounds and a.end in bounds


@N
@given(texts)
def test_resolve_is_idempotent(text):
    once = resolve(text, detect_all(text))
    assert resolve(text, once) == once


def _crossing(anns):
    return any(a.start < b.start < a.end < b.end for a in anns for b in anns)


@N
@given(texts)
def test_inline_round_trip(text):
    assume("{" not in text)
    anns = annotate(text)
    assume(not _crossing(anns))
    plain, parsed = parse_inline(render_inline(text, anns))
    assert plain == text
    assert sorted((a.span, a.category.rank) for a in parsed) == sorted((a.span, a.category.rank) for a in anns)


counts = st.tuples(*[st.integers(0, 500)] * 5)
rows = st.builds(
    lambda acct, kind, n, c: StatsRow(acct, kind, n + 1, None, c),
    st.sampled_from(["a", "b", "c", "d"]),
    st.sampled_from(["corporate", "spokescharacter"]),
    st.integers(0, 300),
    counts,
)
reports = st.lists(rows, max_size=5).map(lambda rs: build_report(_dedupe(rs)))


def _dedupe(rs):
    seen = {}
    for r in rs:
        seen.setdefault((r.account_kind, r.account), r)
    return list(seen.values())


@N
@given(counts)
def test_row_percentages_sum_to_100(c):
    total = sum(c)
    assume(total > 0)
    assert abs(sum(float(fmt_pct(percent(x, total))) for x in c) - 100) <= 0.3


@N
@given(reports, reports, reports)
def test_merge_is_a_commutative_monoid(a, b, c):
    assert merge(a, b) == merge(b, a)
    assert merge(merge(a, b), c) == merge(a, merge(b, c))
    assert merge(a, StatsReport()) == a == merge(StatsReport(), a)


items = st.lists(st.builds(
    lambda acct, kind, cats, valid: AnnotatedMessage(
        Message("m", "x", account=acct, account_kind=kind),
        tuple(Annotation(Span(0, 0), c, None, "") for c in cats),
        Validity.VALID if valid else Validity.SPAM),
    st.sampled_from(["a", "b", "c"]),
    st.sampled_from(["corporate", "spokescharacter"]),
    st.lists(st.sampled_from(CATEGORY_ORDER), max_size=4),
    st.booleans(),
), max_size=12)


@N
@given(items, st.integers(0, 12))
def test_split_then_merge_equals_single_pass(msgs, cut):
    single = build_report(accumulate(msgs))
    halves = merge(build_report(accumulate(msgs[:cut])), build_report(accumulate(msgs[cut:])))
    assert halves == single
