import pytest

from tplcoder.tokenizer import TokenKind, grapheme_boundaries, normalize, segment


def kinds(text):
    return [(t.kind, t.surface) for t in segment(text)]


def test_normalize_returns_same_object_when_clean():
    s = "plain text"
    assert normalize(s) is s
    assert normalize("a\r\nb\rc") == "a\nb\nc"


@pytest.mark.parametrize("text,expected", [
    ("Oh No!!!", [(TokenKind.WORD, "Oh"), (TokenKind.WHITESPACE, " "), (TokenKind.WORD, "No"),
                  (TokenKind.PUNCT_RUN, "!!!")]),
    ("*sigh*", [(TokenKind.DELIMITED, "*sigh*")]),
    ("(laughing)", [(TokenKind.DELIMITED, "(laughing)")]),
    ("check 4sq.com/1x53idj", [(TokenKind.WORD, "check"), (TokenKind.WHITESPACE, " "),
                               (TokenKind.URL, "4sq.com/1x53idj")]),
    ("T-T", [(TokenKind.EMOTICON, "T-T")]),
    ("<3", [(TokenKind.OTHER, "<3")]),
    ("M-I-N-E", [(TokenKind.WORD, "M-I-N-E")]),
    ("#blessed!!!", [(TokenKind.HASHTAG, "#blessed"), (TokenKind.PUNCT_RUN, "!!!")]),
    ("@pal", [(TokenKind.MENTION, "@pal")]),
    ("10:30", [(TokenKind.NUMBER, "10:30")]),
])
def test_token_kinds(text, expected):
    assert kinds(text) == expected


def test_emoticon_after_punctuation():
    assert kinds("No!!!:)")[-2:] == [(TokenKind.PUNCT_RUN, "!!!"), (TokenKind.EMOTICON, ":)")]


def test_url_trailing_punctuation_stripped():
    toks = segment("see http://example.com/a).")
    assert toks[2].surface == "http://example.com/a"


def test_zwj_family_and_skin_tone_stay_whole():
    text = "👨‍👩‍👧👍🏽"
    toks = segment(text)
    assert [t.kind for t in toks] == [TokenKind.EMOJI_RUN]


def test_combining_mark_never_split():
    text = "!́!"
    toks = segment(text)
    bounds = grapheme_boundaries(text)
    assert all(t.start in bounds and t.end in bounds for t in toks)


def test_hashtag_split_mode():
    assert [t.kind for t in segment("#tbt", split_hashtags=True)] == [TokenKind.PUNCT_RUN, TokenKind.WORD]


def test_tiles_input():
    text = "Best. Day. Ever. 😊🐼 http://x.co/y *hugs* :-) #S%^"
    toks = segment(text)
    assert "".join(t.surface for t in toks) == text
    assert all(a.end == b.start for a, b in zip(toks, toks[1:]))
