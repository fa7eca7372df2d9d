# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple
from fractions import Fraction
from functools import cached_property
from itertools import product

from attr import dataclass

from ..errors import DimensionMismatchError
from .primitive import SCHEMA, Index
from .rational import as_rat
from .util import SerializableAttrs, field


def _to_cells(cells: Iterable[Iterable[int]]) -> FrozenSet[Index]:
    return frozenset(tuple(int(i) for i in cell) for cell in cells)


@dataclass(frozen=True)
class GridRegion(SerializableAttrs):
    """
    An open subset of ``[0, n]^d`` made of open grid cells of side ``g = n / r``.

    Cell ``(a_1, …, a_d)`` (1-based) is the open box ``∏ (g·(a_i − 1), g·a_i)``. For 2-D
    regions the first coordinate is ``x`` and the second ``y``. Grid lines are never part of
    the region.
    """

    schema_tag = SCHEMA

    d: int
    n: Fraction = field(converter=as_rat)
    r: int
    cells: FrozenSet[Index] = field(factory=frozenset, converter=_to_cells)

    def __attrs_post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"regions need at least two dimensions, got {self.d}")
        if self.n <= 0:
            raise ValueError(f"side length must be positive, got {self.n}")
        if self.r < 1:
            raise ValueError(f"resolution must be positive, got {self.r}")
        for cell in self.cells:
            if len(cell) != self.d:
                raise DimensionMismatchError(len(cell), self.d)
            if not all(1 <= a <= self.r for a in cell):
                raise ValueError(f"cell {cell} is outside of the {self.r}-grid")

    @classmethod
    def full(cls, d: int, n: Fraction, r: int) -> "GridRegion":
        return cls(d=d, n=n, r=r, cells=product(range(1, r + 1), repeat=d))

    @property
    def g(self) -> Fraction:
        """The cell side."""
        return self.n / self.r

    @property
    def measure(self) -> Fraction:
        return len(self.cells) * self.g**self.d

    def all_cells(self) -> Iterator[Index]:
        return product(range(1, self.r + 1), repeat=self.d)

    def with_cells(self, cells: Iterable[Index]) -> "GridRegion":
        return GridRegion(d=self.d, n=self.n, r=self.r, cells=cells)

    def window(self, a: int) -> Tuple[Fraction, Fraction]:
        """The open interval covered by cell index ``a`` on any axis."""
        return self.g * (a - 1), self.g * a

    @cached_property
    def lines(self) -> Dict[Index, int]:
        """
        Occupancy along the last axis: 1-based prefix of the first ``d − 1`` coordinates to a
        bitmask with bit ``a − 1`` set iff cell ``prefix + (a,)`` is occupied.
        """
        lines: Dict[Index, int] = {}
        for cell in self.cells:
            lines[cell[:-1]] = lines.get(cell[:-1], 0) | (1 << (cell[-1] - 1))
        return lines

    @cached_property
    def row_masks(self) -> List[int]:
        """
        For 2-D regions: index ``b`` (1-based, bottom up; index 0 is unused and empty) to the
        bitmask of occupied cell columns in cell-row ``b``.
        """
        if self.d != 2:
            raise DimensionMismatchError(self.d, 2)
        rows = [0] * (self.r + 1)
        for x, y in self.cells:
            rows[y] |= 1 << (x - 1)
        return rows
