"""Named memo tables shared by the engines.

Entries are filled idempotently: a value depends only on its key, so a
table may be pre-seeded from a cache file, cleared, or filled concurrently
without changing any result.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

log = logging.getLogger(__name__)

CACHE_VERSION = 1

_tables: dict[str, dict] = {}
# keys added since the last load/save, per table
_fresh: dict[str, set] = {}

PERSISTED = ("lr", "bbw")


def table(name: str) -> dict:
    if name not in _tables:
        _tables[name] = {}
        _fresh[name] = set()
    return _tables[name]


def remember(name: str, key, value):
    t = table(name)
    t[key] = value
    if name in PERSISTED:
        _fresh[name].add(key)
    return value


def clear() -> None:
    for name, t in _tables.items():
        t.clear()
        _fresh[name].clear()


def stats() -> dict[str, int]:
    return {name: len(t) for name, t in sorted(_tables.items())}


def _to_json(obj):
    if isinstance(obj, tuple):
        return [_to_json(x) for x in obj]
    if isinstance(obj, dict):
        return [[_to_json(k), _to_json(v)] for k, v in obj.items()]
    return obj


def _from_json(obj):
    if isinstance(obj, list):
        return tuple(_from_json(x) for x in obj)
    return obj


def load(path: str | Path) -> int:
    """Seed persisted tables from an append-only JSONL cache; returns entries read.

    A missing file is fine.  A corrupt or foreign file is ignored with a
    warning; results never depend on the cache.
    """
    path = Path(path)
    if not path.exists():
        return 0
    staged: dict[str, dict] = {name: {} for name in PERSISTED}
    try:
        with path.open(encoding="utf-8") as fh:
            header = json.loads(fh.readline() or "null")
            if not isinstance(header, dict) or header.get("version") != CACHE_VERSION:
                raise ValueError(f"unsupported cache header {header!r}")
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                kind = rec["kind"]
                if kind not in staged:
                    raise ValueError(f"unknown record kind {kind!r}")
                staged[kind][_from_json(rec["key"])] = _decode_value(kind, rec["val"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring memo cache %s: %s", path, exc)
        return 0
    count = 0
    for name, entries in staged.items():
        t = table(name)
        for key, val in entries.items():
            t.setdefault(key, val)
            count += 1
    return count


def _decode_value(kind, val):
    if kind == "lr":
        return tuple((_from_json(k), int(v)) for k, v in val)
    return _from_json(val)


def _encode_value(kind, val):
    if kind == "lr":
        return [[_to_json(k), v] for k, v in val]
    return _to_json(val)


def save(path: str | Path) -> int:
    """Append entries computed since the last load/save; returns entries written."""
    path = Path(path)
    new_file = not path.exists() or path.stat().st_size == 0
    written = 0
    with path.open("a", encoding="utf-8") as fh:
        if new_file:
            fh.write(json.dumps({"grsod-memo": True, "version": CACHE_VERSION}) + "\n")
        for name in PERSISTED:
            t = table(name)
            for key in sorted(_fresh[name], key=repr):
                rec = {"kind": name, "key": _to_json(key), "val": _encode_value(name, t[key])}
                fh.write(json.dumps(rec) + "\n")
                written += 1
            _fresh[name].clear()
    return written
