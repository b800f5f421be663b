import json
import logging

from grsod import memo
from grsod.bottweil import bbw_reduce
from grsod.littlewood import lr_product


def test_cache_round_trip(tmp_path):
    path = tmp_path / "memo.jsonl"
    memo.clear()
    want_lr = lr_product((2, 1), (2, 1))
    want_bbw = bbw_reduce((4, 3, 6, 5))
    written = memo.save(path)
    assert written >= 2
    header = json.loads(path.read_text().splitlines()[0])
    assert header == {"grsod-memo": True, "version": 1}
    memo.clear()
    assert memo.load(path) == written
    assert lr_product((2, 1), (2, 1)) == want_lr
    assert bbw_reduce((4, 3, 6, 5)) == want_bbw


def test_save_appends_only_new_entries(tmp_path):
    path = tmp_path / "memo.jsonl"
    memo.clear()
    lr_product((1,), (1,))
    first = memo.save(path)
    assert memo.save(path) == 0
    lr_product((3,), (1,))
    assert memo.save(path) >= 1
    assert len(path.read_text().splitlines()) == 1 + first + 1


def test_corrupt_cache_is_ignored(tmp_path, caplog):
    path = tmp_path / "memo.jsonl"
    path.write_text('{"grsod-memo": true, "version": 1}\n{"kind": "lr", "key": [[1]\n')
    memo.clear()
    with caplog.at_level(logging.WARNING):
        assert memo.load(path) == 0
    assert "ignoring memo cache" in caplog.text
    assert lr_product((1,), (1,)) == {(2,): 1, (1, 1): 1}


def test_foreign_header_is_ignored(tmp_path):
    path = tmp_path / "memo.jsonl"
    path.write_text('{"version": 99}\n')
    assert memo.load(path) == 0
    assert memo.load(tmp_path / "missing.jsonl") == 0


def test_stats_and_clear():
    memo.clear()
    lr_product((1,), (1,))
    assert memo.stats()["lr"] >= 1
    memo.clear()
    assert memo.stats().get("lr", 0) == 0
