# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Any, Dict
import os
import pathlib

from .util.config import BaseFileConfig, ConfigUpdateHelper, ConfigValueError

BASE_CONFIG = "pkg://zarex/example-config.yaml"
CACHE_DIR_ENV = "ZAREX_CACHE_DIR"

POSITIVE_KEYS = (
    "solver.restarts",
    "solver.swap_rounds",
    "solver.deletion_bits",
    "grid.anneal.steps",
    "matrix.max_axis",
)


class Config(BaseFileConfig):
    def __init__(self, path: str | None, base_path: str = BASE_CONFIG) -> None:
        super().__init__(path, base_path)

    def do_update(self, helper: ConfigUpdateHelper) -> None:
        copy, copy_dict = helper.copy, helper.copy_dict

        copy_dict("solver.exact_max_cells")
        copy("solver.restarts")
        copy("solver.swap_rounds")
        copy("solver.deletion_bits")

        copy_dict("grid.exact_max_cells")
        copy("grid.anneal.steps")
        copy("grid.anneal.t_max")
        copy("grid.anneal.t_min")

        copy("matrix.max_axis")

        copy("cache.enabled")
        copy("cache.directory")

        copy("logging")

    def check(self) -> None:
        for section in ("solver", "grid"):
            key = f"{section}.exact_max_cells"
            for d, limit in (self[key] or {}).items():
                if not _positive_int(d) or not _positive_int(limit):
                    raise ConfigValueError(key, f"{d}: {limit} is not a positive guard")
        for key in POSITIVE_KEYS:
            if not _positive_int(self[key]):
                raise ConfigValueError(key, f"must be a positive integer, got {self[key]!r}")
        t_max, t_min = self["grid.anneal.t_max"], self["grid.anneal.t_min"]
        if t_min <= 0:
            raise ConfigValueError("grid.anneal.t_min", "must be positive")
        elif t_min >= t_max:
            raise ConfigValueError("grid.anneal.t_min", "must be below grid.anneal.t_max")

    def max_cells(self, section: str) -> Dict[int, int]:
        return {int(d): int(limit) for d, limit in self[f"{section}.exact_max_cells"].items()}

    @property
    def cache_dir(self) -> pathlib.Path:
        directory = os.environ.get(CACHE_DIR_ENV) or self["cache.directory"]
        return pathlib.Path(directory).expanduser()


def _positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0
