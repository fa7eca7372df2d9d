# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from fractions import Fraction

import pytest

from ..errors import AlignmentError, PatternError
from ..types import Relation
from .checks import (
    ZARANKIEWICZ_FIXTURE,
    addedpt,
    addedseg,
    decider_oracle,
    diagseg_construction,
    extremal_j22,
    fixture_document,
    fixture_values,
    horizseg,
    kst_general_t,
    kst_sandwich,
    lowerth_roundtrip,
    main_equivalence,
    projection,
    ps_blank,
    px_superadditive,
    segments_trend,
    superadditive,
    tardos_blank,
    zarankiewicz_fixture,
)
from .registry import checks


def only(reports):
    assert len(reports) == 1
    return reports[0]


def test_every_default_case_is_named():
    for handler in checks.values():
        assert handler.cases
        assert handler.help_text


def test_fixture_document_matches_committed_file():
    assert fixture_values() == {1: 1, 2: 3, 3: 6, 4: 9, 5: 12, 6: 16}
    assert fixture_document(4).count("\n") == 11
    assert fixture_document() == ZARANKIEWICZ_FIXTURE.read_text()


@pytest.mark.parametrize("n", [2, 4, 6])
def test_zarankiewicz_fixture(n):
    report = only(zarankiewicz_fixture(n=n))
    assert report.passed
    assert report.lhs == fixture_values()[n]
    assert extremal_j22(n) is extremal_j22(n)


def test_superadditive():
    report = only(superadditive(m=2, n=3))
    assert (report.lhs, report.rhs) == (12, 9)
    assert report.passed


def test_tardos_blank():
    report = only(tardos_blank(matrix="J22", k=1, n=4))
    assert report.params == {"matrix": "J22", "k": 1, "n": 4}
    assert report.rhs == 4 * 3
    assert report.passed


def test_horizseg():
    report = only(horizseg(c=1, n=4, r=4))
    assert report.relation == Relation.EQ
    assert report.lhs == report.rhs == 4
    assert report.params == {"c": "1", "n": "4", "r": 4}


def test_diagseg_construction():
    report = only(diagseg_construction(a=1, b=1, n=2, r=2))
    assert report.lhs == report.rhs == 3
    half = only(diagseg_construction(a=Fraction(1, 2), b=Fraction(3, 2), n=2, r=4))
    assert half.lhs == Fraction(13, 4)
    with pytest.raises(AlignmentError):
        diagseg_construction(a=1, b=1, n=2, r=3)


def test_lowerth_roundtrip():
    report = only(lowerth_roundtrip(n=4))
    assert report.lhs == report.rhs == 9


def test_main_equivalence():
    grid = only(main_equivalence(pattern="unit_grid", n=4, r=4))
    assert (grid.lhs, grid.middle, grid.rhs) == (9, 9, 12)
    assert grid.passed
    point = only(main_equivalence(pattern="point", n=2, r=2))
    assert point.lhs == point.middle == point.rhs == 0
    with pytest.raises(AlignmentError):
        main_equivalence(pattern="half_pair", n=2, r=2)
    with pytest.raises(PatternError):
        main_equivalence(pattern="long_segment", n=2, r=2)


def test_added_point_and_segment_are_sharp_for_a_point():
    segment = only(addedseg(pattern="point", c=1, n=2, r=2))
    assert segment.lhs == segment.rhs == 2
    unchanged = only(addedseg(pattern="point", c=0, n=2, r=2))
    assert unchanged.lhs == unchanged.rhs == 0
    point = only(addedpt(pattern="point", c=1, n=2, r=2))
    assert point.lhs == point.rhs == 2


def test_added_segment_on_a_pair():
    report = only(addedseg(pattern="pair", c=1, n=3, r=3))
    assert report.passed


def test_ps_blank():
    report = only(ps_blank(pattern="unit_grid", q=2, n=4, r=4))
    assert report.rhs == 9 * 3
    assert report.note == "K=2, m=2"
    assert report.passed
    point = only(ps_blank(pattern="point", q=2, n=2, r=2))
    assert point.lhs == point.rhs == 0


@pytest.mark.parametrize("n, expected", [(2, 3), (3, 6)])
def test_kst_sandwich(n, expected):
    report = only(kst_sandwich(s=1, c=1, n=n, r=n))
    assert report.lhs == expected
    assert report.middle == expected
    assert report.passed


def test_kst_general_t():
    assert only(kst_general_t(s=1, t=3, c=1, n=3, r=3)).passed


def test_projection():
    point = only(projection(pattern="lifted_point", n=2, r=2))
    assert point.lhs == point.rhs == 0
    pair = only(projection(pattern="lifted_pair", n=2, r=2))
    assert pair.lhs == pair.rhs == 4
    # a 3 × 3 layer of unit cells holds at most 6 without a rectangle of corners
    grid = only(projection(pattern="lifted_unit_grid", n=3, r=3))
    assert grid.lhs == grid.rhs == 18
    assert (grid.params["n"], grid.params["r"]) == ("3", 3)
    with pytest.raises(PatternError):
        projection(pattern="pair", n=2, r=2)


def test_px_superadditive():
    report = only(px_superadditive(pattern="pair", m=1, n=2, g=1))
    assert (report.lhs, report.rhs) == (3, 3)
    assert report.note == "block-diagonal union is free"


def test_segments_trend():
    reports = segments_trend(pattern="rising_segments", g=1, start=1, steps=2)
    assert len(reports) == 2
    assert all(report.passed for report in reports)
    assert [report.params["n"] for report in reports] == ["1", "2"]


def test_decider_oracle():
    report = only(decider_oracle(r=2, samples=0, seed=0))
    assert report.lhs == report.rhs == 16 * 13
    sampled = only(decider_oracle(r=3, samples=5, seed=1))
    assert sampled.rhs == 5 * 13
    assert sampled.passed
    # the default run covers every region up to r = 3
    assert [case["r"] for case in checks["decider_oracle"].cases] == [1, 2, 3]
    assert all(case["samples"] == 0 for case in checks["decider_oracle"].cases)
