# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Any, Generic, Type, TypeVar

from ruamel.yaml.comments import CommentedMap

T = TypeVar("T")


class RecursiveDict(Generic[T]):
    """A mapping wrapper that resolves dotted keys (``grid.anneal.steps``) into nested maps."""

    def __init__(self, data: T | None = None, dict_factory: Type[T] | None = None) -> None:
        self._dict_factory = dict_factory or dict
        self._data: CommentedMap = data or self._dict_factory()

    @staticmethod
    def parse_key(key: str) -> tuple[str, str | None]:
        head, _, rest = key.partition(".")
        return head, rest or None

    def get(self, key: str, default_value: Any = None) -> Any:
        data = self._data
        head, rest = self.parse_key(key)
        while rest is not None:
            try:
                data = data[head]
            except (KeyError, TypeError):
                return default_value
            head, rest = self.parse_key(rest)
        try:
            return data[head]
        except (KeyError, TypeError):
            return default_value

    def __getitem__(self, key: str) -> Any:
        return self.get(key, None)

    def __contains__(self, key: str) -> bool:
        return self.get(key, None) is not None

    def set(self, key: str, value: Any) -> None:
        data = self._data
        head, rest = self.parse_key(key)
        while rest is not None:
            if head not in data or data[head] is None:
                data[head] = self._dict_factory()
            data = data[head]
            head, rest = self.parse_key(rest)
        data[head] = value

    def __setitem__(self, key: str, value: Any) -> None:
        self.set(key, value)

    def delete(self, key: str) -> None:
        parent_key, _, leaf = key.rpartition(".")
        parent = self.get(parent_key) if parent_key else self._data
        if not parent or leaf not in parent:
            return
        del parent[leaf]
        try:
            del parent.ca.items[leaf]
        except (AttributeError, KeyError):
            pass

    def __delitem__(self, key: str) -> None:
        self.delete(key)
