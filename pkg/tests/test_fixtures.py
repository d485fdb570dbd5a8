import shutil

import pytest

from tplcoder.engine import annotate
from tplcoder.corpus import classify_validity
from tplcoder.fixtures import FixtureError, _default_dir, check_case, load_fixtures
from tplcoder.resolver import render_inline


def test_shipped_fixtures_load():
    cases, tables = load_fixtures()
    assert len(cases) >= 60 and len(tables) == 3
    assert all(c.source for c in cases)
    for t in tables:
        assert all(r.instances_total == sum(r.instances_by_category) for r in t.rows)
        assert sum(r.messages_analyzed for r in t.rows) == t.messages_analyzed


def test_every_golden_case_passes():
    cases, _ = load_fixtures()
    failures = {}
    for c in cases:
        m = c.message()
        anns = annotate(m)
        problems = check_case(c, anns, classify_validity(m))
        if c.inline is not None and render_inline(m, anns) != c.inline:
            problems.append("inline")
        if problems:
            failures[c.id] = problems
    assert failures == {}


def _copy(tmp_path):
    d = tmp_path / "fx"
    shutil.copytree(str(_default_dir()), d)
    return d


def test_empty_dir_is_an_error(tmp_path):
    with pytest.raises(FixtureError, match="SHA256SUMS"):
        load_fixtures(tmp_path)


def test_tampered_fixture_detected(tmp_path):
    d = _copy(tmp_path)
    with open(d / "golden.jsonl", "a", encoding="utf-8") as f:
        f.write('{"id":"x","text":"x","expect":[],"source":"x"}\n')
    with pytest.raises(FixtureError, match="golden.jsonl: checksum mismatch"):
        load_fixtures(d)


def test_missing_fixture_named(tmp_path):
    d = _copy(tmp_path)
    (d / "table2.csv").unlink()
    with pytest.raises(FixtureError, match="table2.csv"):
        load_fixtures(d)
