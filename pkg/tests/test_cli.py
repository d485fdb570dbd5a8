import json

import pytest

from tplcoder.cli import main
from tplcoder.fixtures import _default_dir

WHOLE_FOODS = "A bad cupcake?!?! Oh No!!! I'm so sorry. *sigh* Thank you for letting us know"


def write_jsonl(path, records):
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), encoding="utf-8")
    return str(path)


def test_annotate_standoff(tmp_path):
    src = write_jsonl(tmp_path / "in.jsonl", [{"id": "wf", "text": WHOLE_FOODS, "account": "wholefoods"}])
    out = tmp_path / "out.jsonl"
    assert main(["annotate", "--in", src, "--out", str(out)]) == 0
    rec = json.loads(out.read_text(encoding="utf-8"))
    assert rec["id"] == "wf" and rec["validity"] == "valid"
    assert [(a["category"], a["surface"]) for a in rec["annotations"]] == [
        ("VQ", "?!?!"), ("VS", "Oh"), ("VQ", "!!!"), ("VS", "*sigh*")]
    assert set(rec["annotations"][0]) == {"start", "end", "category", "subtype", "surface", "canonical", "rule_id"}


def test_annotate_inline(tmp_path):
    src = write_jsonl(tmp_path / "in.jsonl", [{"id": "1", "text": "*sigh*"}])
    out = tmp_path / "out.jsonl"
    assert main(["annotate", "--in", src, "--out", str(out), "--format", "inline"]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["inline"] == "{VS}*sigh*{/VS}"


def test_annotate_empty_file(tmp_path):
    src = tmp_path / "in.jsonl"
    src.write_text("", encoding="utf-8")
    out = tmp_path / "out.jsonl"
    assert main(["annotate", "--in", str(src), "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == ""


def test_annotate_partial_failure(tmp_path, capsys):
    src = tmp_path / "in.jsonl"
    src.write_text('not json\n{"id":"1","text":"lol"}\n', encoding="utf-8")
    out = tmp_path / "out.jsonl"
    assert main(["annotate", "--in", str(src), "--out", str(out)]) == 1
    assert len(out.read_text(encoding="utf-8").splitlines()) == 1
    assert "line 1" in capsys.readouterr().err


def test_fatal_errors(tmp_path, capsys):
    assert main(["annotate", "--in", str(tmp_path / "missing.jsonl")]) == 2
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("min_emphasis_run = zero\n", encoding="utf-8")
    src = write_jsonl(tmp_path / "in.jsonl", [{"id": "1", "text": "x"}])
    assert main(["annotate", "--in", src, "--config", str(cfg)]) == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_bytes(b'{"id":"1","text":"\xff"}\n')
    assert main(["annotate", "--in", str(bad)]) == 2
    assert "tplcoder:" in capsys.readouterr().err


def test_stats_from_counts(tmp_path, capsys):
    src = str(_default_dir().joinpath("table1.csv"))
    assert main(["stats", "--counts", "--in", src, "--with-tpl", "859", "--noun", "brand tweets"]) == 0
    out = capsys.readouterr().out
    assert "60.9%" in out and "53.1%" in out and "55.6%" in out
    assert "Of the 4,168 brand tweets that were analyzed, 859 (20.6%) contained one or more instances of TPL." in out


def test_stats_synthetic_hand_count(tmp_path, capsys):
    records = [
        {"id": "1", "text": "awesome!!!", "account": "acme", "account_kind": "corporate"},
        {"id": "2", "text": "Plain update for everyone.", "account": "acme", "account_kind": "corporate"},
        {"id": "3", "text": "lol 😊", "account": "acme", "account_kind": "corporate"},
        {"id": "4", "text": "@pal thanks!!", "account": "acme", "account_kind": "corporate"},
        {"id": "5", "text": "RT @x: wow!!", "account": "acme", "account_kind": "corporate", "is_repost": True},
        {"id": "6", "text": "Viagra Cialis cheap! SAVE HERE", "account": "acme", "account_kind": "corporate"},
        {"id": "7", "text": "Hi there friends.", "account": "mascot", "account_kind": "spokescharacter"},
        {"id": "8", "text": "xoxo", "account": "mascot", "account_kind": "spokescharacter"},
        {"id": "9", "text": "New menu today.", "account": "mascot", "account_kind": "spokescharacter"},
        {"id": "10", "text": "I'm at McDonald's 4sq.com/1x53idj", "account": "mascot",
         "account_kind": "spokescharacter"},
    ]
    src = write_jsonl(tmp_path / "in.jsonl", records)
    assert main(["stats", "--in", src, "--format", "csv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    # brand mode drops 4 (reply) and 5 (repost); 6 is spam and 10 is a bot
    assert rows[1:] == ["corporate,acme,3,2,3,1,1,0,1,0", "spokescharacter,mascot,3,1,1,0,0,1,0,0"]
    assert main(["stats", "--in", src]) == 0
    assert "Of the 6 messages that were analyzed, 3 (50.0%)" in capsys.readouterr().out


def test_stats_at_replies_on_corpus_without_replies(tmp_path, capsys):
    src = write_jsonl(tmp_path / "in.jsonl", [{"id": "1", "text": "lol"}])
    assert main(["stats", "--in", src, "--mode", "at-replies"]) == 0
    assert "Of the 0 messages" in capsys.readouterr().out


def test_stats_reuses_annotated_records(tmp_path, capsys):
    src = write_jsonl(tmp_path / "in.jsonl", [{"id": "1", "text": "lol"}])
    ann = tmp_path / "ann.jsonl"
    main(["annotate", "--in", src, "--out", str(ann)])
    assert main(["stats", "--in", str(ann), "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "unknown,,1,1,1,0,1,0,0,0"


def test_selftest_pristine(capsys):
    assert main(["selftest"]) == 0
    assert "fixtures passed" in capsys.readouterr().out


def test_selftest_detects_removed_lexicon_entry(tmp_path, capsys):
    lex = (_default_dir().parent / "vocalizations.lex").read_text(encoding="utf-8")
    (tmp_path / "vocalizations.lex").write_text(
        "\n".join(l for l in lex.splitlines() if not l.endswith(" lol")) + "\n", encoding="utf-8")
    assert main(["selftest", "--lexicon-dir", str(tmp_path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "'lol'" in out


def test_selftest_is_config_sensitive(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("min_emphasis_run = 5\n", encoding="utf-8")
    assert main(["selftest", "--config", str(cfg)]) == 1
    assert "?!?!" in capsys.readouterr().out


def test_help_lists_config_defaults(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    assert "min_emphasis_run = 2" in out and "char_limit_twitter = 140" in out
