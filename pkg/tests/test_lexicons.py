import pytest

from tplcoder.lexicons import (
    EmojiClassMap,
    LexiconError,
    MatchMode,
    classify_emoji,
    load_resources,
    match_word,
    parse_emoji_map,
    parse_lexicon,
)
from tplcoder.model import Category

RES = load_resources()


@pytest.mark.parametrize("word,canonical", [
    ("ummmm", "umm"), ("hahaha", "haha"), ("hahah", "haha"), ("Ewwwww", "ew"), ("BRRR", "brr"),
    ("yumyum", "yumyum"), ("hmmm", "hmm"), ("lol", "lol"), ("Oh", "oh"),
])
def test_vocalization_matches(word, canonical):
    hit = match_word(word, RES.vocalizations)
    assert hit is not None and hit[1] == canonical


@pytest.mark.parametrize("word", ["summer", "offer", "ha", "hello", "xx", "laughing"])
def test_vocalization_non_matches(word):
    assert match_word(word, RES.vocalizations) is None


def test_delimited_only_entries():
    assert match_word("laughing", RES.vocalizations, delimited=True) is not None
    assert match_word("hugs", RES.tactile) is None
    assert match_word("hugs", RES.tactile, delimited=True) is not None


def test_multiword_and_shared_entries():
    assert match_word("high five", RES.tactile)[1] == "high five"
    assert match_word("pat on the back", RES.tactile) is not None
    assert match_word("slap", RES.vocalizations) and match_word("slap", RES.tactile)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(LexiconError, match=r"x\.lex:2: unknown category"):
        parse_lexicon("VS exact ok\nZZ exact bad\n", "x.lex")
    with pytest.raises(LexiconError, match="first on line 1"):
        parse_lexicon("VS exact a\nVS exact a\n", "x.lex")
    with pytest.raises(LexiconError, match="does not fit"):
        parse_lexicon("VS exact two words\n")


def test_same_canonical_in_two_categories_is_allowed():
    lex = parse_lexicon("VS exact slap\nTK exact slap\n")
    assert len(lex) == 2
    assert [e.match_mode for e in lex] == [MatchMode.EXACT, MatchMode.EXACT]


def test_emoji_map_and_fallbacks():
    emap = RES.emoji_map
    assert classify_emoji("😊", emap) is Category.VK
    assert classify_emoji("🐼", emap) is Category.VK
    assert classify_emoji("🔥", emap) is Category.A
    assert classify_emoji("🤝", emap) is Category.TK
    assert classify_emoji("👍🏽", emap) is Category.VK
    tiny = EmojiClassMap({"😊": Category.VK})
    assert classify_emoji("😊‍🔥", tiny) is Category.VK
    assert classify_emoji("🚀", tiny) is Category.A


def test_emoji_map_rejects_non_kinesic_categories():
    with pytest.raises(LexiconError):
        parse_emoji_map("😊 VQ\n")


def test_lexicon_dir_override(tmp_path):
    (tmp_path / "vocalizations.lex").write_text("VS exact blorp\n", encoding="utf-8")
    res = load_resources(tmp_path)
    assert match_word("blorp", res.vocalizations) is not None
    assert match_word("lol", res.vocalizations) is None
    assert match_word("xoxo", res.tactile) is not None
