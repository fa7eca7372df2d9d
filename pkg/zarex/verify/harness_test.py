# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import pytest

from ..errors import SchemaError, UnknownCheckError
from .checks import ZARANKIEWICZ_FIXTURE
from .harness import plan, regen_fixtures, run_checks


def test_plan():
    assert plan(["horizseg"]) == [
        ("horizseg", {"c": 1, "n": 4, "r": 4}),
        ("horizseg", {"c": 1, "n": 2, "r": 2}),
    ]
    # both default cases collapse into one
    assert plan(["horizseg"], {"n": 2, "r": 2}) == [("horizseg", {"c": 1, "n": 2, "r": 2})]
    assert plan(["random_deletion"], seed=42)[0][1]["seed"] == 42
    assert "seed" not in plan(["horizseg"], seed=42)[0][1]


def test_plan_rejects_unknown_input():
    with pytest.raises(SchemaError):
        plan(["horizseg"], {"pattern": "pair"})
    with pytest.raises(UnknownCheckError):
        plan(["horizseg", "nope"])


async def test_run_checks_groups_by_check_id():
    reports = await run_checks(["horizseg", "diagseg_construction"])
    assert [report.check_id for report in reports] == [
        "diagseg_construction",
        "diagseg_construction",
        "horizseg",
        "horizseg",
    ]
    assert [report.params["n"] for report in reports[2:]] == ["4", "2"]
    assert all(report.passed for report in reports)


async def test_process_pool_gives_the_same_reports():
    ids = ["horizseg", "addedpt"]
    single = await run_checks(ids)
    pooled = await run_checks(ids, threads=2)
    assert [report.json() for report in pooled] == [report.json() for report in single]


def test_regen_fixtures(tmp_path):
    path = tmp_path / "zarankiewicz.json"
    assert regen_fixtures(path)
    assert path.read_bytes() == ZARANKIEWICZ_FIXTURE.read_bytes()
    assert not regen_fixtures(path)
