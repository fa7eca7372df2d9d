# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from abc import ABC
import logging
import pkgutil

from ruamel.yaml import YAML
from ruamel.yaml.comments import CommentedMap
from yarl import URL

from .base import BaseConfig
from .recursive_dict import RecursiveDict

yaml = YAML()
yaml.indent(4)
yaml.width = 200

log: logging.Logger = logging.getLogger("zarex.util.config")


class BaseFileConfig(BaseConfig, ABC):
    """
    A config backed by an optional YAML file layered over a packaged base file.

    Args:
        path: The user config file, or ``None`` to run on the packaged defaults alone.
        base_path: Either a filesystem path or a ``pkg://<package>/<file>`` URL.
    """

    def __init__(self, path: str | None, base_path: str) -> None:
        super().__init__()
        self._data = CommentedMap()
        self.path: str | None = path
        self.base_path: str = base_path

    def load(self) -> None:
        if self.path is None:
            self._data = CommentedMap()
            return
        with open(self.path, "r") as stream:
            self._data = yaml.load(stream) or CommentedMap()

    def load_base(self) -> RecursiveDict[CommentedMap] | None:
        if self.base_path.startswith("pkg://"):
            url = URL(self.base_path)
            try:
                data = pkgutil.get_data(url.host, url.path.lstrip("/"))
            except OSError:
                return None
            return RecursiveDict(yaml.load(data), CommentedMap) if data else None
        try:
            with open(self.base_path, "r") as stream:
                return RecursiveDict(yaml.load(stream), CommentedMap)
        except OSError:
            log.debug("Base config %s not readable", self.base_path)
        return None
