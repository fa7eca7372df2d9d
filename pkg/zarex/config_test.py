# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import pathlib

import pytest

from .config import CACHE_DIR_ENV, Config
from .util.config import ConfigValueError


def load(tmp_path: pathlib.Path, text: str = "") -> Config:
    path = None
    if text:
        path = tmp_path / "config.yaml"
        path.write_text(text)
    config = Config(str(path) if path else None)
    config.load_and_update()
    return config


def test_packaged_defaults(tmp_path):
    config = load(tmp_path)
    config.check()
    assert config.max_cells("solver") == {2: 36, 3: 27}
    assert config.max_cells("grid") == {2: 25, 3: 27}
    assert config["grid.anneal.steps"] == 20000
    assert config["logging.version"] == 1


def test_user_values_override_defaults(tmp_path):
    config = load(tmp_path, "solver:\n    restarts: 9\n    exact_max_cells:\n        2: 25\n")
    config.check()
    assert config["solver.restarts"] == 9
    assert config["solver.swap_rounds"] == 8
    assert config.max_cells("solver") == {2: 25, 3: 27}


@pytest.mark.parametrize(
    "text, key",
    [
        ("grid:\n    anneal:\n        t_min: 3.0\n", "grid.anneal.t_min"),
        ("grid:\n    anneal:\n        t_min: 0\n", "grid.anneal.t_min"),
        ("matrix:\n    max_axis: 0\n", "matrix.max_axis"),
        ("solver:\n    restarts: two\n", "solver.restarts"),
        ("grid:\n    exact_max_cells:\n        2: -1\n", "grid.exact_max_cells"),
    ],
)
def test_invalid_values(tmp_path, text, key):
    with pytest.raises(ConfigValueError) as e:
        load(tmp_path, text).check()
    assert e.value.key == key


def test_cache_dir_env(tmp_path, monkeypatch):
    config = load(tmp_path)
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
    assert config.cache_dir == pathlib.Path("~/.cache/zarex").expanduser()
    monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path))
    assert config.cache_dir == tmp_path
