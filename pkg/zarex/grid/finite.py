# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Containment of finite patterns in grid regions.

A pattern is contained in a region iff every axis has an expanding map of its coordinate classes
that sends each point into an occupied open cell. Expansion only constrains consecutive classes,
so each axis is a chain (see :mod:`.chain`). The search mirrors submatrix containment: the axes
before the second-to-last one are enumerated as whole chains, the second-to-last one class at a
time, and the last axis is never enumerated, only narrowed with occupancy masks and placed
greedily.
"""
from typing import Callable, List, Optional, Sequence, Tuple
from itertools import pairwise, product

from attr import dataclass

from ..errors import DimensionMismatchError
from ..types import AugmentedPattern, EpsRat, FinitePattern, GridRegion, Index, SerializableAttrs
from .chain import Chain, axis_chains, branch_chains, enter, fit_chain, lowest_cell

# visit(outer chains, second-to-last chain, last chain, last-axis masks) -> accept
Visitor = Callable[[Sequence[Chain], Chain, Chain, List[int]], bool]


@dataclass(frozen=True)
class EmbeddingWitness(SerializableAttrs):
    """
    An explicit embedding: for each axis the cell of every coordinate class (in increasing
    coordinate order) and the position it is mapped to.
    """

    cells: Tuple[Tuple[int, ...], ...]
    coords: Tuple[Tuple[EpsRat, ...], ...]

    def validate(self, region: GridRegion, pattern: FinitePattern) -> bool:
        """Re-check the embedding from scratch against the region and pattern."""
        if region.d != pattern.dim or len(self.cells) != pattern.dim:
            return False
        g = region.g
        for axis in range(pattern.dim):
            values = pattern.axis_values(axis)
            cells, coords = self.cells[axis], self.coords[axis]
            if len(cells) != len(values) or len(coords) != len(values):
                return False
            for cell, coord in zip(cells, coords):
                if not 1 <= cell <= region.r:
                    return False
                if not EpsRat(g * (cell - 1)) < coord < EpsRat(g * cell):
                    return False
            for (v0, c0), (v1, c1) in pairwise(zip(values, coords)):
                if c1 - c0 < EpsRat(v1 - v0):
                    return False
        ranks = [
            {value: rank for rank, value in enumerate(pattern.axis_values(axis))}
            for axis in range(pattern.dim)
        ]
        for point in pattern.points:
            cell = tuple(self.cells[axis][ranks[axis][c]] for axis, c in enumerate(point))
            if cell not in region.cells:
                return False
        return True


class FiniteEmbedder:
    """Search plan for one pattern against one region."""

    def __init__(self, region: GridRegion, pattern: FinitePattern) -> None:
        if region.d != pattern.dim:
            raise DimensionMismatchError(pattern.dim, region.d)
        self.region = region
        self.pattern = pattern
        self.d = pattern.dim
        self.g = region.g
        self.gaps = [pattern.gaps(axis) for axis in range(self.d)]
        ranks = [
            {value: rank for rank, value in enumerate(pattern.axis_values(axis))}
            for axis in range(self.d)
        ]
        self.classes: List[Index] = sorted(
            tuple(ranks[axis][c] for axis, c in enumerate(point)) for point in pattern.points
        )
        self.size = [len(r) for r in ranks]
        self.groups: List[List[Tuple[Index, int]]] = [[] for _ in range(self.size[-2])]
        for cls in self.classes:
            self.groups[cls[-2]].append((cls[:-2], cls[-1]))
        self.lines = region.lines

    def run(self, visit: Visitor) -> bool:
        if not self.region.cells:
            return False
        r = self.region.r
        outer_choices = [axis_chains(self.gaps[axis], self.g, r) for axis in range(self.d - 2)]
        for outer in product(*outer_choices):
            full = [(1 << r) - 1] * self.size[-1]
            if self._assign(outer, 0, None, full, (), (), visit):
                return True
        return False

    def _assign(
        self,
        outer: Sequence[Chain],
        k: int,
        previous: Optional[EpsRat],
        masks: List[int],
        cells: Tuple[int, ...],
        coords: Tuple[EpsRat, ...],
        visit: Visitor,
    ) -> bool:
        if k == self.size[-2]:
            last = fit_chain(masks, self.gaps[-1], self.g)
            return last is not None and visit(outer, (cells, coords), last, masks)
        lower = previous + self.gaps[-2][k - 1] if k else None
        for cell in range(lowest_cell(lower, self.g), self.region.r + 1):
            narrowed = list(masks)
            for outer_cls, last_cls in self.groups[k]:
                prefix = tuple(outer[axis][0][i] for axis, i in enumerate(outer_cls)) + (cell,)
                narrowed[last_cls] &= self.lines.get(prefix, 0)
            if fit_chain(narrowed, self.gaps[-1], self.g) is None:
                continue
            here = enter(cell, lower, self.g)
            deeper = (cells + (cell,), coords + (here,))
            if self._assign(outer, k + 1, here, narrowed, *deeper, visit):
                return True
        return False

    def witness(self, outer: Sequence[Chain], second: Chain, last: Chain) -> EmbeddingWitness:
        chains = list(outer) + [second, last]
        return EmbeddingWitness(
            cells=tuple(chain[0] for chain in chains), coords=tuple(chain[1] for chain in chains)
        )


def find_embedding(region: GridRegion, pattern: FinitePattern) -> Optional[EmbeddingWitness]:
    """An embedding of ``pattern`` into ``region``, or ``None`` if the region avoids it."""
    embedder = FiniteEmbedder(region, pattern)
    found: List[EmbeddingWitness] = []

    def visit(outer: Sequence[Chain], second: Chain, last: Chain, _: List[int]) -> bool:
        found.append(embedder.witness(outer, second, last))
        return True

    embedder.run(visit)
    return found[0] if found else None


def region_contains_finite(region: GridRegion, pattern: FinitePattern) -> bool:
    """
    Check whether the region contains the finite pattern.

    Examples:
        >>> cell = GridRegion(d=2, n=1, r=1, cells=[(1, 1)])
        >>> region_contains_finite(cell, FinitePattern.of((0, 0), (1, 0)))
        False
    """
    return find_embedding(region, pattern) is not None


def region_contains_augmented(region: GridRegion, pattern: AugmentedPattern) -> bool:
    """
    Check whether the region contains a finite pattern with a horizontal tail.

    The anchor is in the last column class, so its image is the infimum of the last x chain
    position, and the tail only competes with the anchor's cell-row from there to the right.
    Every cell for the anchor's row class is tried; the other classes stay greedy.
    """
    base = pattern.base
    if region.d != 2:
        raise DimensionMismatchError(2, region.d)
    embedder = FiniteEmbedder(region, base)
    row = base.axis_values(1).index(pattern.anchor[1])
    gaps_y = base.gaps(1)
    g = region.g
    rows = region.row_masks

    def visit(outer: Sequence[Chain], second: Chain, last: Chain, masks: List[int]) -> bool:
        x_cell, x_pos = second[0][-1], second[1][-1]
        for y_cells, _ in branch_chains(masks, gaps_y, g, row):
            cells = rows[y_cells[row]] >> x_cell << x_cell
            room = EpsRat(g * x_cell) - x_pos + g * cells.bit_count()
            if room > EpsRat(pattern.tail):
                return True
        return False

    return embedder.run(visit)

