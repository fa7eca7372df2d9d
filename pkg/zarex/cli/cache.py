# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Iterator, List, Optional
from contextlib import contextmanager
from datetime import datetime, timezone
import fcntl
import hashlib
import logging
import pathlib

from .. import __version__
from ..types import JSON, CacheEntry, CacheKey, SerializerError, dumps
from ..util.logging import TraceLogger

log: TraceLogger = logging.getLogger("zarex.cache")

CACHE_FILE = "results.jsonl"


def cache_key(operation: str, params: JSON) -> CacheKey:
    canonical = dumps({"operation": operation, "params": params})
    return CacheKey(hashlib.sha256(canonical.encode("utf-8")).hexdigest())


class ResultCache:
    """
    Append-only JSON lines of :class:`CacheEntry`, one per computed result.

    Readers take a shared and writers an exclusive advisory lock on a sibling ``.lock`` file, so
    concurrent invocations never see a half-written line. Entries written by another zarex
    version are ignored on lookup.
    """

    path: pathlib.Path
    lock_path: pathlib.Path
    enabled: bool

    def __init__(self, directory: pathlib.Path, enabled: bool = True) -> None:
        self.path = pathlib.Path(directory) / CACHE_FILE
        self.lock_path = self.path.with_suffix(".lock")
        self.enabled = enabled

    @contextmanager
    def _locked(self, exclusive: bool) -> Iterator[None]:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.lock_path, "a") as lock:
            fcntl.flock(lock, fcntl.LOCK_EX if exclusive else fcntl.LOCK_SH)
            try:
                yield
            finally:
                fcntl.flock(lock, fcntl.LOCK_UN)

    def _load(self) -> List[CacheEntry]:
        try:
            file = open(self.path, "r")
        except FileNotFoundError:
            return []
        entries = []
        with file:
            for number, line in enumerate(file, start=1):
                if not line.strip():
                    continue
                try:
                    entries.append(CacheEntry.parse_json(line))
                except SerializerError:
                    log.warning("Skipping unreadable cache line %d of %s", number, self.path)
        return entries

    def _save(self, entry: CacheEntry) -> None:
        with open(self.path, "a") as file:
            file.write(entry.json() + "\n")

    def entries(self) -> List[CacheEntry]:
        with self._locked(exclusive=False):
            return self._load()

    def get(self, operation: str, params: JSON) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        key = cache_key(operation, params)
        found = None
        for entry in self.entries():
            if entry.key == key and entry.tool_version == __version__:
                found = entry
        if found:
            log.debug("Cache hit for %s %s", operation, key[:12])
        return found

    def put(self, operation: str, params: JSON, record: JSON) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        entry = CacheEntry(
            key=cache_key(operation, params),
            operation=operation,
            params=params,
            record=record,
            created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            tool_version=__version__,
        )
        with self._locked(exclusive=True):
            self._save(entry)
        log.debug("Cached %s %s", operation, entry.key[:12])
        return entry

    def clear(self) -> int:
        """Truncate the cache file. Returns how many entries it held."""
        with self._locked(exclusive=True):
            count = len(self._load())
            if self.path.exists():
                self.path.write_text("")
        log.info("Cleared %d cache entries from %s", count, self.path)
        return count
