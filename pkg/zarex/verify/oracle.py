# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Brute-force reference answers, written without the solver and decider machinery.

They are slow on purpose and only meant for small instances: fixture regeneration and
cross-checks in tests and in the ``decider_oracle`` check.
"""
from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple
from fractions import Fraction
from math import floor

from ..types import GridRegion, Point, SegmentPattern


def zarankiewicz(n: int) -> int:
    """
    ``ex(n, J_{2,2})``: the most ones in an ``n × n`` matrix in which no two rows share two
    columns. Rows are chosen in non-increasing (popcount, value) order, which loses nothing.
    """
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m), reverse=True)
    best = 0

    def extend(rows: List[int], start: int, ones: int) -> None:
        nonlocal best
        best = max(best, ones)
        left = n - len(rows)
        if not left or start == len(masks):
            return
        if ones + left * masks[start].bit_count() <= best:
            return
        for i in range(start, len(masks)):
            mask = masks[i]
            if ones + left * mask.bit_count() <= best:
                return
            if all((mask & row).bit_count() <= 1 for row in rows):
                extend(rows + [mask], i, ones + mask.bit_count())

    extend([], 0, 0)
    return best


def _candidates(region: GridRegion, denominator: int) -> List[Fraction]:
    """Multiples of ``1/denominator`` strictly inside ``(0, n)`` and off the grid lines."""
    found = []
    k = 1
    while (value := Fraction(k, denominator)) < region.n:
        if (value / region.g).denominator != 1:
            found.append(value)
        k += 1
    return found


def _cell(value: Fraction, g: Fraction) -> int:
    return floor(value / g) + 1


def _increasing(
    values: Sequence[Fraction], candidates: Sequence[Fraction]
) -> Iterator[Tuple[Fraction, ...]]:
    """Every assignment of candidates to sorted values that is at least as spread out."""

    def extend(chosen: Tuple[Fraction, ...], start: int) -> Iterator[Tuple[Fraction, ...]]:
        k = len(chosen)
        if k == len(values):
            yield chosen
            return
        for i in range(start, len(candidates)):
            if k and candidates[i] - chosen[-1] < values[k] - values[k - 1]:
                continue
            yield from extend(chosen + (candidates[i],), i + 1)

    return extend((), 0)


def embeds_points(
    region: GridRegion, points: Sequence[Point], x_denominator: int = 4, y_denominator: int = 4
) -> bool:
    """
    Whether the 2-D point set maps into the region by expanding maps whose values lie on fixed
    rational grids. Every ``y`` assignment is tried; along ``x`` the lowest admissible candidate
    per class is taken.
    """
    g = region.g
    xs = sorted({x for x, _ in points})
    ys = sorted({y for _, y in points})
    column: Dict[Fraction, List[Fraction]] = {x: [] for x in xs}
    for x, y in points:
        column[x].append(y)
    x_candidates = _candidates(region, x_denominator)
    occupied = region.cells
    for images in _increasing(ys, _candidates(region, y_denominator)):
        row = {y: _cell(image, g) for y, image in zip(ys, images)}
        previous: Optional[Fraction] = None
        for k, x in enumerate(xs):
            placed = None
            for candidate in x_candidates:
                if previous is not None and candidate - previous < x - xs[k - 1]:
                    continue
                cell = _cell(candidate, g)
                if all((cell, row[y]) in occupied for y in column[x]):
                    placed = candidate
                    break
            if placed is None:
                break
            previous = placed
        else:
            return True
    return False


def segment_samples(pattern: SegmentPattern, step: Fraction = Fraction(1, 4)) -> List[Point]:
    """Points every ``step`` along each segment, endpoints included."""
    points = []
    for seg in pattern.segments:
        count = seg.length / step
        if count.denominator != 1:
            raise ValueError(f"segment length {seg.length} is not a multiple of {step}")
        points.extend((seg.x_lo + i * step, seg.y) for i in range(int(count) + 1))
    return points


def embeds_segments(
    region: GridRegion, pattern: SegmentPattern, step: Fraction = Fraction(1, 4)
) -> bool:
    """
    Segment containment through their samples. For quarter-grid data and unit cells, samples at
    spacing ``1/4`` placed on the ``1/16`` grid behave like the whole segments.
    """
    return embeds_points(region, segment_samples(pattern, step), 16, 4)
