# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import attr

from .. import __version__
from .cache import ResultCache, cache_key


def test_key_is_canonical():
    assert cache_key("ex", {"n": 2, "mode": "exact"}) == cache_key("ex", {"mode": "exact", "n": 2})
    assert cache_key("ex", {"n": 2}) != cache_key("px-search", {"n": 2})
    assert len(cache_key("ex", {})) == 64


def test_put_and_get(tmp_path):
    cache = ResultCache(tmp_path / "nested")
    assert cache.get("ex", {"n": 2}) is None
    entry = cache.put("ex", {"n": 2}, {"value": 3})
    assert entry.key == cache_key("ex", {"n": 2})
    assert entry.tool_version == __version__
    assert cache.get("ex", {"n": 2}).record == {"value": 3}
    assert cache.get("ex", {"n": 3}) is None
    # the newest line wins
    cache.put("ex", {"n": 2}, {"value": 4})
    assert cache.get("ex", {"n": 2}).record == {"value": 4}
    assert len(cache.path.read_text().splitlines()) == 2
    assert cache.lock_path.exists()


def test_disabled_cache_touches_nothing(tmp_path):
    cache = ResultCache(tmp_path / "off", enabled=False)
    assert cache.put("ex", {"n": 2}, {"value": 3}) is None
    assert cache.get("ex", {"n": 2}) is None
    assert not (tmp_path / "off").exists()


def test_skips_other_versions_and_bad_lines(tmp_path, caplog):
    cache = ResultCache(tmp_path)
    entry = cache.put("ex", {"n": 2}, {"value": 3})
    stale = attr.evolve(entry, record={"value": 9}, tool_version="0.0.1")
    with cache.path.open("a") as file:
        file.write("not json\n")
        file.write(stale.json() + "\n")
    assert cache.get("ex", {"n": 2}).record == {"value": 3}
    assert len(cache.entries()) == 2
    assert "unreadable cache line 2" in caplog.text


def test_clear(tmp_path):
    cache = ResultCache(tmp_path)
    assert cache.clear() == 0
    cache.put("ex", {"n": 2}, {"value": 3})
    cache.put("ex", {"n": 3}, {"value": 6})
    assert cache.clear() == 2
    assert cache.entries() == []
