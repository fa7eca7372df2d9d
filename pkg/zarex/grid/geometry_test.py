# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from fractions import Fraction

import pytest

from ..errors import AlignmentError, DimensionMismatchError, PatternError
from ..types import (
    AugmentedPattern,
    BitMatrix,
    FinitePattern,
    GridRegion,
    HSegment,
    Pattern,
    Segment,
    SegmentPattern,
    StackPattern,
)
from .deciders import region_contains
from .geometry import (
    discretize,
    embed_region,
    refine,
    region_measure,
    region_to_matrix,
    region_translate,
    region_union,
)


def test_measure():
    assert region_measure(GridRegion(d=2, n=4, r=4)) == 0
    assert region_measure(GridRegion.full(2, 4, 4)) == 16
    assert region_measure(discretize(lambda cell: cell[0] == 1, 4, 4)) == 4
    assert region_measure(GridRegion.full(3, Fraction(3, 2), 3)) == Fraction(27, 8)


def test_to_matrix():
    assert region_to_matrix(GridRegion.full(2, 2, 2)).to_rows() == ["11", "11"]
    strip = discretize(lambda cell: cell[0] == 1, 3, 3)
    assert region_to_matrix(strip).to_rows() == ["100", "100", "100"]
    corner = GridRegion(d=2, n=3, r=3, cells=[(3, 3), (1, 1)])
    assert region_to_matrix(corner) == BitMatrix.from_rows(["001", "000", "100"])
    assert region_to_matrix(GridRegion(d=3, n=2, r=2, cells=[(1, 2, 1)])).ones == {(1, 2, 1)}


def test_refine():
    region = GridRegion(d=2, n=2, r=2, cells=[(1, 1), (2, 2)])
    fine = refine(region, 2)
    assert fine.r == 4
    assert fine.measure == region.measure
    assert fine.cells == {(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 4), (4, 3), (4, 4)}
    assert refine(region, 1) == region
    with pytest.raises(ValueError):
        refine(region, 0)


def test_refine_keeps_hsegment_answers():
    cell = GridRegion.full(2, 1, 1)
    fine = refine(cell, 2)
    assert fine.measure == cell.measure
    # the new line x = 1/2 is skipped by expansion
    for c in (Fraction(3, 4), Fraction(1)):
        assert region_contains(fine, HSegment(c=c)) == region_contains(cell, HSegment(c=c))
    assert region_contains(fine, HSegment(c=Fraction(3, 4)))


def test_union_translate_embed():
    left = GridRegion(d=2, n=2, r=2, cells=[(1, 1)])
    right = GridRegion(d=2, n=2, r=2, cells=[(2, 2)])
    assert region_union(left, right).cells == {(1, 1), (2, 2)}
    with pytest.raises(AlignmentError):
        region_union(left, GridRegion(d=2, n=2, r=4))
    with pytest.raises(DimensionMismatchError):
        region_union(left, GridRegion(d=3, n=2, r=2))
    assert region_translate(left, (1, 1)) == right
    with pytest.raises(AlignmentError):
        region_translate(right, (1, 0))
    big = embed_region(left, 5)
    assert (big.r, big.g, big.cells) == (5, 1, left.cells)
    with pytest.raises(AlignmentError):
        embed_region(left, Fraction(5, 2))
    with pytest.raises(AlignmentError):
        embed_region(left, 1)


def test_front_door_dispatch():
    full = GridRegion.full(2, 2, 2)
    strip = discretize(lambda cell: cell[0] == 1, 2, 2)
    patterns = [
        (FinitePattern.of((0, 0), (1, 0)), True, False),
        (HSegment(c=1), True, False),
        (SegmentPattern([Segment(0, 0, 1)]), True, False),
        (StackPattern(s=1, t=2, c=1), True, False),
        (AugmentedPattern(base=FinitePattern.of((0, 0), (0, 1)), tail=1), True, False),
    ]
    for pattern, in_full, in_strip in patterns:
        assert region_contains(full, pattern) is in_full
        assert region_contains(strip, pattern) is in_strip

    class Blob(Pattern):
        dim = 2

    with pytest.raises(PatternError):
        region_contains(full, Blob())
