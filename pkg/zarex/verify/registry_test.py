# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from fractions import Fraction

import pytest

from ..errors import PatternError, SchemaError, UnknownCheckError
from ..types import CheckReport, FinitePattern, Relation
from .checks import horizseg
from .registry import (
    CheckHandler,
    checks,
    get_check,
    named_matrix,
    named_pattern,
    parse_param,
    parse_params,
    select_checks,
)


def test_parse_param():
    assert parse_param("4") == 4
    assert parse_param("-2") == -2
    assert parse_param("3/2") == Fraction(3, 2)
    assert parse_param("unit_grid") == "unit_grid"
    for bad in ("2/4", "0.5", "1/-2"):
        with pytest.raises(SchemaError):
            parse_param(bad)


def test_parse_params():
    assert parse_params(["n=4", "c=1/2", "pattern=pair"]) == {
        "n": 4,
        "c": Fraction(1, 2),
        "pattern": "pair",
    }
    with pytest.raises(SchemaError):
        parse_params(["n"])


def test_named():
    assert named_pattern("lifted_pair") == FinitePattern.of((0, 0, 0), (1, 0, 0))
    assert named_matrix("J22").weight == 4
    with pytest.raises(PatternError):
        named_pattern("triangle")
    with pytest.raises(PatternError):
        named_matrix("J99")


def _report(n: int, seed: int = 0) -> CheckReport:
    return CheckReport(
        check_id="toy", params={"n": n}, lhs=Fraction(n), rhs=Fraction(seed), relation=Relation.GE
    )


def test_handler_expand():
    handler = CheckHandler(_report, "toy", [{"n": 1}, {"n": 2}], "")
    assert handler.randomized
    assert handler.help_text == ""
    assert handler.expand() == [{"n": 1}, {"n": 2}]
    # an override can collapse cases into one
    assert handler.expand({"n": 3, "other": 1}) == [{"n": 3}]
    assert handler.expand(seed=5) == [{"n": 1, "seed": 5}, {"n": 2, "seed": 5}]
    assert handler(n=2) == [_report(2)]


def test_registry_lookup():
    assert checks["horizseg"] is horizseg
    assert get_check("horizseg").name == "horizseg"
    assert get_check("horizseg").help_text.startswith("The grid value")
    with pytest.raises(UnknownCheckError):
        get_check("nope")
    everything = select_checks(["all"])
    assert [handler.name for handler in everything] == sorted(checks)
    assert select_checks(["horizseg", "all"])[0].name == "horizseg"
    assert len(select_checks(["horizseg", "all"])) == len(checks)
