# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Callable, Sequence
from fractions import Fraction
from itertools import product

from ..errors import AlignmentError, DimensionMismatchError
from ..types import BitMatrix, GridRegion, Index, RatLike, as_rat


def region_measure(region: GridRegion) -> Fraction:
    """
    Exact Lebesgue measure of the region.

    Examples:
        >>> region_measure(GridRegion.full(2, 4, 4))
        Fraction(16, 1)
    """
    return region.measure


def region_to_matrix(region: GridRegion) -> BitMatrix:
    """
    The occupancy matrix of a region.

    For 2-D regions matrix row 1 is the top cell-row and column 1 the leftmost cell-column, so the
    matrix reads like the picture. In higher dimensions matrix axis ``i`` is cell coordinate ``i``.
    """
    r = region.r
    if region.d == 2:
        return BitMatrix(dims=(r, r), ones={(r + 1 - y, x) for x, y in region.cells})
    return BitMatrix(dims=(r,) * region.d, ones=region.cells)


def discretize(
    predicate: Callable[[Index], bool], n: RatLike, r: int, d: int = 2
) -> GridRegion:
    """The cells of the ``r``-grid on ``[0, n]^d`` that ``predicate`` accepts."""
    full = GridRegion.full(d, n, r)
    return full.with_cells(cell for cell in full.all_cells() if predicate(cell))


def refine(region: GridRegion, k: int) -> GridRegion:
    """
    The same measure on the ``k·r`` grid, every cell split into ``k^d`` cells.

    The new grid lines inside each old cell are not part of the refined region, so it is a
    subset of ``region`` that differs from it by a null set.
    """
    if k < 1:
        raise ValueError(f"refinement factor must be positive, got {k}")
    offsets = list(product(range(1, k + 1), repeat=region.d))
    return GridRegion(
        d=region.d,
        n=region.n,
        r=region.r * k,
        cells=(
            tuple(k * (a - 1) + o for a, o in zip(cell, offset))
            for cell in region.cells
            for offset in offsets
        ),
    )


def _same_grid(left: GridRegion, right: GridRegion) -> None:
    if left.d != right.d:
        raise DimensionMismatchError(left.d, right.d)
    if left.n != right.n or left.r != right.r:
        raise AlignmentError(
            f"regions live on different grids (n={left.n}, r={left.r} vs n={right.n}, r={right.r})"
        )


def region_union(left: GridRegion, right: GridRegion) -> GridRegion:
    _same_grid(left, right)
    return left.with_cells(left.cells | right.cells)


def region_translate(region: GridRegion, offset: Sequence[int]) -> GridRegion:
    """Shift every cell by a whole number of cells; the result must stay inside the square."""
    if len(offset) != region.d:
        raise DimensionMismatchError(len(offset), region.d)
    cells = [tuple(a + o for a, o in zip(cell, offset)) for cell in region.cells]
    if any(not 1 <= a <= region.r for cell in cells for a in cell):
        raise AlignmentError(f"shifting by {tuple(offset)} leaves the {region.r}-grid")
    return region.with_cells(cells)


def embed_region(region: GridRegion, n: RatLike) -> GridRegion:
    """The same cells in the corner of a larger square ``[0, n]^d`` at the same cell side."""
    n = as_rat(n)
    cells_per_side = n / region.g
    if n < region.n or cells_per_side.denominator != 1:
        raise AlignmentError(f"cannot place a {region.n}-square on the {region.g}-grid of {n}")
    return GridRegion(d=region.d, n=n, r=int(cells_per_side), cells=region.cells)
