# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Containment of horizontal segment patterns in 2-D grid regions.

A closed segment of length ``c`` fits into finitely many disjoint open intervals iff their total
length exceeds ``c``: an expanding map may jump over the gaps, and every open interval holds any
closed piece strictly shorter than itself. :func:`sweep` is the constructive form of that rule.
"""
from typing import Dict, List, Optional, Sequence, Tuple
from fractions import Fraction
from itertools import pairwise

from attr import dataclass

from ..errors import DimensionMismatchError
from ..types import EpsRat, GridRegion, RatLike, Segment, SegmentPattern, StackPattern
from ..types import SerializableAttrs, as_rat
from .chain import axis_chains, enter, lowest_cell


def sweep(
    mask: int, lower: Optional[EpsRat], length: Fraction, g: Fraction
) -> Optional[Tuple[EpsRat, EpsRat]]:
    """
    Place a closed segment of ``length`` as early as possible in the cells of ``mask``.

    Returns the infimal start and end of the image, or ``None`` when the cells above ``lower``
    are too short.
    """
    rest = mask & -(1 << (lowest_cell(lower, g) - 1))
    remaining = EpsRat(length)
    start: Optional[EpsRat] = None
    while rest:
        low = rest & -rest
        rest ^= low
        cell = low.bit_length()
        here = enter(cell, lower, g)
        if start is None:
            start = here
        end = here + remaining
        if end < EpsRat(g * cell):
            return start, end
        remaining = (remaining - (EpsRat(g * cell) - here)).plus_eps()
        lower = None
    return None


@dataclass(frozen=True)
class SegmentWitness(SerializableAttrs):
    """
    An explicit embedding of horizontal segments: per segment (in the order given) its cell-row,
    the image of its ``y`` and the images of its endpoints.
    """

    rows: Tuple[int, ...]
    ys: Tuple[EpsRat, ...]
    starts: Tuple[EpsRat, ...]
    ends: Tuple[EpsRat, ...]

    def validate(self, region: GridRegion, segments: Sequence[Segment]) -> bool:
        """
        Re-check the embedding against the region. Segments with the same ``x`` projection share
        one horizontal map, so their image has to fit in every one of their rows at once.
        """
        if region.d != 2 or not len(self.rows) == len(self.ys) == len(segments):
            return False
        g = region.g
        for row, y in zip(self.rows, self.ys):
            if not 1 <= row <= region.r or not EpsRat(g * (row - 1)) < y < EpsRat(g * row):
                return False
        by_y = sorted(range(len(segments)), key=lambda i: segments[i].y)
        for a, b in pairwise(by_y):
            if self.ys[b] - self.ys[a] < EpsRat(segments[b].y - segments[a].y):
                return False
        shared: Dict[Tuple[Fraction, Fraction], List[int]] = {}
        for i, seg in enumerate(segments):
            shared.setdefault((seg.x_lo, seg.x_hi), []).append(i)
        images = []
        for (x_lo, x_hi), members in shared.items():
            if len({(self.starts[i], self.ends[i]) for i in members}) != 1:
                return False
            mask = -1
            for i in members:
                mask &= region.row_masks[self.rows[i]]
            start, end = self.starts[members[0]], self.ends[members[0]]
            covered = _covered(mask, start, end, g)
            if covered is None or covered < EpsRat(x_hi - x_lo):
                return False
            images.append((x_lo, x_hi, start, end))
        images.sort()
        for (_, hi0, _, end0), (lo1, _, start1, _) in pairwise(images):
            if start1 - end0 < EpsRat(lo1 - hi0):
                return False
        return True


def _covered(mask: int, start: EpsRat, end: EpsRat, g: Fraction) -> Optional[EpsRat]:
    """Occupied length of ``[start, end]``, or ``None`` unless both ends are in occupied cells."""
    windows = [
        (EpsRat(g * (cell - 1)), EpsRat(g * cell))
        for cell in range(1, mask.bit_length() + 1)
        if mask >> (cell - 1) & 1
    ]
    if not any(lo < start < hi for lo, hi in windows):
        return None
    if not any(lo < end < hi for lo, hi in windows):
        return None
    pieces = [(max(lo, start), min(hi, end)) for lo, hi in windows]
    return sum((right - left for left, right in pieces if left < right), EpsRat(0))


def region_contains_hsegment(region: GridRegion, c: RatLike) -> bool:
    """
    Check whether some cell-row of a 2-D region is longer than ``c``.

    Examples:
        >>> strip = GridRegion(d=2, n=4, r=4, cells=[(1, y) for y in range(1, 5)])
        >>> region_contains_hsegment(strip, 1), region_contains_hsegment(strip, "1/2")
        (False, True)
    """
    if region.d != 2:
        raise DimensionMismatchError(region.d, 2)
    c = as_rat(c)
    return any(mask.bit_count() * region.g > c for mask in region.row_masks)


def find_segments_embedding(
    region: GridRegion, pattern: SegmentPattern
) -> Optional[SegmentWitness]:
    """
    Try every feasible assignment of segments to cell-rows, then place the segments left to
    right, each as early as the previous one and the required ``x`` gap allow.
    """
    if region.d != 2:
        raise DimensionMismatchError(region.d, 2)
    g = region.g
    rows = region.row_masks
    segs = pattern.segments
    by_y = sorted(range(len(segs)), key=lambda i: segs[i].y)
    y_gaps = [segs[b].y - segs[a].y for a, b in pairwise(by_y)]
    for cells, coords in axis_chains(y_gaps, g, region.r):
        row_of = [0] * len(segs)
        y_of = [EpsRat(0)] * len(segs)
        for k, i in enumerate(by_y):
            row_of[i], y_of[i] = cells[k], coords[k]
        if not all(rows[row] for row in row_of):
            continue
        starts: List[EpsRat] = []
        ends: List[EpsRat] = []
        for i, seg in enumerate(segs):
            lower = ends[-1] + (seg.x_lo - segs[i - 1].x_hi) if i else None
            placed = sweep(rows[row_of[i]], lower, seg.length, g)
            if placed is None:
                break
            starts.append(placed[0])
            ends.append(placed[1])
        else:
            return SegmentWitness(
                rows=tuple(row_of), ys=tuple(y_of), starts=tuple(starts), ends=tuple(ends)
            )
    return None


def region_contains_segments(region: GridRegion, pattern: SegmentPattern) -> bool:
    return find_segments_embedding(region, pattern) is not None


def stack_segments(pattern: StackPattern) -> List[Segment]:
    """The ``t`` segments ``[0, s] × {i·c}``, bottom first."""
    return [Segment(y=i * pattern.c, x_lo=0, x_hi=pattern.s) for i in range(1, pattern.t + 1)]


def find_stack_embedding(region: GridRegion, pattern: StackPattern) -> Optional[SegmentWitness]:
    """
    The segments of a stack share their ``x`` projection, so one horizontal map has to place
    ``[0, s]`` inside the intersection of all chosen cell-rows.
    """
    if region.d != 2:
        raise DimensionMismatchError(region.d, 2)
    g = region.g
    rows = region.row_masks
    for cells, coords in axis_chains([pattern.c] * (pattern.t - 1), g, region.r):
        mask = -1
        for row in cells:
            mask &= rows[row]
        placed = sweep(mask, None, pattern.s, g)
        if placed is not None:
            return SegmentWitness(
                rows=cells,
                ys=coords,
                starts=(placed[0],) * pattern.t,
                ends=(placed[1],) * pattern.t,
            )
    return None


def region_contains_stack(region: GridRegion, pattern: StackPattern) -> bool:
    return find_stack_embedding(region, pattern) is not None
