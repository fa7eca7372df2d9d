# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from fractions import Fraction
from itertools import product

from hypothesis import given, settings, strategies as st
import pytest

from ..errors import DimensionMismatchError
from ..matrix import matrix_contains
from ..types import AugmentedPattern, FinitePattern, GridRegion, pattern_to_matrix
from ..verify.oracle import embeds_points
from .chain import axis_chains, fit_chain
from .finite import find_embedding, region_contains_augmented, region_contains_finite
from .geometry import region_to_matrix
from .segments import region_contains_hsegment

HALF = Fraction(1, 2)

PATTERNS = [
    FinitePattern.of((0, 0)),
    FinitePattern.of((0, 0), (1, 0)),
    FinitePattern.of((0, 0), (HALF, 0)),
    FinitePattern.of((0, 0), (1, 1)),
    FinitePattern.of((0, 0), (HALF, HALF)),
    FinitePattern.of((0, 1), (1, 0)),
    FinitePattern.of((0, 0), (1, 0), (0, 1)),
    FinitePattern.of((0, 0), (HALF, 1), (1, HALF)),
    FinitePattern.of((0, 0), (1, 0), (0, 1), (1, 1)),
    FinitePattern.of((0, 0), (HALF, 0), (0, HALF), (HALF, HALF)),
    FinitePattern.of((0, 0), (Fraction(3, 2), 0)),
]


def all_regions(r):
    cells = list(product(range(1, r + 1), repeat=2))
    for bits in range(1 << len(cells)):
        yield GridRegion(d=2, n=r, r=r, cells=[c for k, c in enumerate(cells) if bits >> k & 1])


@st.composite
def regions(draw, r=3):
    cells = st.tuples(st.integers(1, r), st.integers(1, r))
    return GridRegion(d=2, n=r, r=r, cells=draw(st.sets(cells, max_size=r * r)))


def test_chains():
    g = Fraction(1)
    # gap 1/2 fits inside one unit cell, gap 1 does not
    assert [cells for cells, _ in axis_chains([HALF], g, 2)] == [(1, 1), (1, 2), (2, 2)]
    assert [cells for cells, _ in axis_chains([g], g, 2)] == [(1, 2)]
    assert fit_chain([0b01, 0b01], [g], g) is None
    cells, coords = fit_chain([0b11, 0b10], [HALF], g)
    assert cells == (1, 2)
    assert str(coords[0]) == "0+ε" and str(coords[1]) == "1+ε"


def test_examples():
    cell = GridRegion(d=2, n=1, r=1, cells=[(1, 1)])
    assert region_contains_finite(cell, FinitePattern.of((0, 0)))
    assert not region_contains_finite(cell, FinitePattern.of((0, 0), (1, 0)))
    diagonal = GridRegion(d=2, n=2, r=2, cells=[(1, 1), (2, 2)])
    assert region_contains_finite(diagonal, FinitePattern.of((0, 0), (HALF, HALF)))
    assert region_contains_finite(diagonal, FinitePattern.of((0, 0), (1, 1)))
    assert not region_contains_finite(diagonal, FinitePattern.of((0, 1), (1, 0)))
    assert not region_contains_finite(GridRegion(d=2, n=2, r=2), FinitePattern.of((0, 0)))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        region_contains_finite(GridRegion.full(3, 2, 2), FinitePattern.of((0, 0)))


def test_witness_validates():
    full = GridRegion.full(2, 3, 3)
    for pattern in PATTERNS:
        witness = find_embedding(full, pattern)
        assert witness is not None
        assert witness.validate(full, pattern)
    corner = GridRegion(d=2, n=3, r=3, cells=[(1, 1)])
    witness = find_embedding(full, PATTERNS[1])
    assert not witness.validate(corner, PATTERNS[1])


def test_three_dimensions():
    pair = FinitePattern.of((0, 0, 0), (1, 0, 0))
    line = GridRegion(d=3, n=2, r=2, cells=[(1, 1, 1), (2, 1, 1)])
    column = GridRegion(d=3, n=2, r=2, cells=[(1, 1, 1), (1, 2, 1), (1, 1, 2)])
    assert region_contains_finite(line, pair)
    assert not region_contains_finite(column, pair)
    witness = find_embedding(line, pair)
    assert witness.validate(line, pair)


@pytest.mark.parametrize("r", [2, 3])
def test_exhaustive_against_oracle(r):
    for region in all_regions(r):
        for pattern in PATTERNS:
            expected = embeds_points(region, sorted(pattern.points))
            assert region_contains_finite(region, pattern) == expected, (region.cells, pattern)


@settings(max_examples=150, deadline=None)
@given(regions(3), st.sampled_from(PATTERNS))
def test_agrees_with_oracle(region, pattern):
    assert region_contains_finite(region, pattern) == embeds_points(region, sorted(pattern.points))


@st.composite
def rank_patterns(draw):
    """Patterns whose consecutive classes are exactly one apart."""
    raw = draw(st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=4))
    xs = sorted({x for x, _ in raw})
    ys = sorted({y for _, y in raw})
    return FinitePattern.of(*((xs.index(x), ys.index(y)) for x, y in raw))


@settings(max_examples=200, deadline=None)
@given(regions(4), rank_patterns())
def test_unit_gaps_match_matrix_containment(region, pattern):
    expected = matrix_contains(region_to_matrix(region), pattern_to_matrix(pattern))
    assert region_contains_finite(region, pattern) == expected


def test_augmented_single_point_is_a_segment():
    point = FinitePattern.of((0, 0))
    for region in all_regions(2):
        for tail in (HALF, Fraction(1), Fraction(3, 2)):
            pattern = AugmentedPattern(base=point, tail=tail)
            expected = region_contains_hsegment(region, tail)
            assert region_contains_augmented(region, pattern) == expected, (region.cells, tail)


def test_augmented_uses_the_anchor_row():
    pillar = FinitePattern.of((0, 0), (0, 1))
    one = AugmentedPattern(base=pillar, tail=1)
    half = AugmentedPattern(base=pillar, tail=HALF)
    column = GridRegion(d=2, n=2, r=2, cells=[(1, 1), (1, 2)])
    assert region_contains_augmented(column, half)
    assert not region_contains_augmented(column, one)
    assert region_contains_augmented(
        GridRegion(d=2, n=2, r=2, cells=[(1, 1), (1, 2), (2, 1)]), one
    )
    assert not region_contains_augmented(
        GridRegion(d=2, n=2, r=2, cells=[(1, 1), (1, 2), (2, 2)]), one
    )


def test_augmented_against_sampled_tail():
    base = FinitePattern.of((0, 0), (HALF, 1))
    for region in all_regions(2):
        for tail in (HALF, Fraction(1)):
            pattern = AugmentedPattern(base=base, tail=tail)
            x, y = pattern.anchor
            steps = int(tail * 4)
            points = sorted(base.points | {(x + Fraction(i, 4), y) for i in range(1, steps + 1)})
            expected = embeds_points(region, points, 16, 4)
            assert region_contains_augmented(region, pattern) == expected, (region.cells, tail)
