# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""Explicit regions and patterns that witness lower bounds."""
from __future__ import annotations

from typing import NamedTuple, Optional
from fractions import Fraction
from itertools import product

from .errors import AlignmentError, DimensionMismatchError, PatternError
from .grid import embed_region, region_translate, region_union
from .types import (
    BitMatrix,
    FinitePattern,
    GridRegion,
    RatLike,
    as_rat,
    ceil_div,
    common_unit,
    min_gap,
)


def _cells_per_side(n: Fraction, c: Fraction) -> int:
    count = n / c
    if c <= 0 or count.denominator != 1:
        raise AlignmentError(f"cell side {c} does not divide the side length {n}")
    return int(count)


def _resolution(n: Fraction, r: Optional[int], *lengths: Fraction) -> int:
    if r is None:
        return _cells_per_side(n, common_unit(n, *lengths))
    g = n / r
    for length in lengths:
        if (length / g).denominator != 1:
            raise AlignmentError(f"{length} is not a whole number of cells of side {g}")
    return r


def region_from_matrix(matrix: BitMatrix, c: RatLike, n: RatLike) -> GridRegion:
    """
    One open ``c``-cell per one of the matrix, matrix row 1 on top.

    Examples:
        >>> region_from_matrix(BitMatrix.from_rows(["10", "01"]), 1, 2).cells
        frozenset({(1, 2), (2, 1)})
    """
    c, n = as_rat(c), as_rat(n)
    r = _cells_per_side(n, c)
    if any(size != r for size in matrix.dims):
        raise AlignmentError(f"a {matrix.dims} matrix does not tile [0, {n}] with cells of {c}")
    if matrix.d == 2:
        cells = ((j, r + 1 - i) for i, j in matrix.ones)
    else:
        cells = matrix.ones
    return GridRegion(d=matrix.d, n=n, r=r, cells=cells)


def strip(c: RatLike, n: RatLike, r: Optional[int] = None) -> GridRegion:
    """
    ``(0, c) × (0, n)``; ``r`` defaults to the coarsest grid that has ``c`` on a grid line.

    Examples:
        >>> strip(1, 4).measure
        Fraction(4, 1)
    """
    c, n = as_rat(c), as_rat(n)
    if not 0 < c <= n:
        raise PatternError(f"strip width must be in (0, {n}], got {c}")
    r = _resolution(n, r, c)
    width = int(c / (n / r))
    return GridRegion(d=2, n=n, r=r, cells=product(range(1, width + 1), range(1, r + 1)))


def lshape(a: RatLike, b: RatLike, n: RatLike, r: Optional[int] = None) -> GridRegion:
    """``(0, a) × (0, n) ∪ (0, n) × (0, b)``, of measure ``(a + b)·n − a·b``."""
    a, b, n = as_rat(a), as_rat(b), as_rat(n)
    if not (0 < a <= n and 0 < b <= n):
        raise PatternError(f"L-shape arms must be in (0, {n}], got a={a}, b={b}")
    r = _resolution(n, r, a, b)
    g = n / r
    wide, high = int(a / g), int(b / g)
    full = GridRegion.full(2, n, r)
    return full.with_cells(cell for cell in full.all_cells() if cell[0] <= wide or cell[1] <= high)


class SegmentBox(NamedTuple):
    """The ``width × height`` box spanned by a diagonal segment or an arc."""

    width: Fraction
    height: Fraction

    def lshape_measure(self, n: RatLike) -> Fraction:
        n = as_rat(n)
        return (self.width + self.height) * n - self.width * self.height


def diagonal_segment_box(a: RatLike, b: RatLike) -> SegmentBox:
    a, b = as_rat(a), as_rat(b)
    if a <= 0 or b <= 0:
        raise PatternError(f"a diagonal segment needs a positive box, got {a} × {b}")
    return SegmentBox(a, b)


def grid_pattern(r: int, c: Optional[RatLike] = None) -> FinitePattern:
    """
    The ``r × r`` grid ``{i·c/r}²`` inside ``[0, c]²``, or the integer grid ``{1..r}²`` when
    ``c`` is omitted.
    """
    if r < 2:
        raise PatternError(f"grid patterns need r >= 2, got {r}")
    if c is None:
        values = [Fraction(i) for i in range(1, r + 1)]
    else:
        c = as_rat(c)
        if c <= 0:
            raise PatternError(f"grid side must be positive, got {c}")
        values = [i * c / r for i in range(1, r + 1)]
    return FinitePattern(dim=2, points=product(values, repeat=2))


def product_lift(region: GridRegion, n: Optional[RatLike] = None) -> GridRegion:
    """``S × (0, n)``: every cell repeated along a new last axis; measure times ``n``."""
    if n is not None and as_rat(n) != region.n:
        raise AlignmentError(f"cannot lift a {region.n}-square with a side of {n}")
    return GridRegion(
        d=region.d + 1,
        n=region.n,
        r=region.r,
        cells=(cell + (k,) for cell in region.cells for k in range(1, region.r + 1)),
    )


def aligned_cell_size(
    pattern: FinitePattern, n: RatLike, c_prime: Optional[RatLike] = None
) -> Fraction:
    """
    The largest ``c <= min(c', 1)`` with ``n / c`` an integer, where ``c'`` defaults to the
    smallest class gap of the pattern. It is never below half of ``min(c', 1)``.
    """
    n = as_rat(n)
    if c_prime is None:
        c_prime = min_gap(pattern)
        if c_prime is None:
            c_prime = Fraction(1)
    cap = min(as_rat(c_prime), Fraction(1))
    if cap <= 0 or n <= 0:
        raise PatternError(f"need positive n and gap, got n={n}, c'={cap}")
    return n / ceil_div(n, cap)


def block_diagonal(first: GridRegion, second: GridRegion) -> GridRegion:
    """
    ``first`` in the lower left and ``second`` in the upper right corner of the square of side
    ``m + n``. Both must share the cell side.
    """
    if first.d != second.d:
        raise DimensionMismatchError(first.d, second.d)
    if first.g != second.g:
        raise AlignmentError(f"cell sides differ: {first.g} and {second.g}")
    side = first.n + second.n
    lower = embed_region(first, side)
    upper = region_translate(embed_region(second, side), (first.r,) * first.d)
    return region_union(lower, upper)


def stack_lift_pattern(pattern: FinitePattern, t: int, c: RatLike) -> FinitePattern:
    """``P × {c, 2c, …, t·c}`` in one more dimension."""
    c = as_rat(c)
    if t < 1 or c <= 0:
        raise PatternError(f"need t >= 1 and c > 0, got t={t}, c={c}")
    return FinitePattern(
        dim=pattern.dim + 1,
        points=(point + (k * c,) for point in pattern.points for k in range(1, t + 1)),
    )
