# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple
from functools import cached_property
from math import prod

from attr import dataclass

from ..errors import DimensionMismatchError
from .primitive import SCHEMA, Index
from .util import SerializableAttrs, field


def _to_dims(dims: Iterable[int]) -> Tuple[int, ...]:
    return tuple(int(size) for size in dims)


def _to_ones(ones: Iterable[Iterable[int]]) -> FrozenSet[Index]:
    return frozenset(tuple(int(i) for i in one) for one in ones)


@dataclass(frozen=True)
class BitMatrix(SerializableAttrs):
    """
    A d-dimensional 0-1 array given by its shape and the 1-based indices of its ones.

    Bitset views (:attr:`lines`, :attr:`rows`) are derived lazily: every line along the last axis
    becomes an ``int`` whose bit ``j`` is set iff the entry at last-axis index ``j + 1`` is one.
    """

    schema_tag = SCHEMA

    dims: Tuple[int, ...] = field(converter=_to_dims)
    ones: FrozenSet[Index] = field(factory=frozenset, converter=_to_ones)

    def __attrs_post_init__(self) -> None:
        if len(self.dims) < 2:
            raise ValueError("matrices have at least two axes")
        if any(size < 1 for size in self.dims):
            raise ValueError(f"every axis needs a positive length, got {self.dims}")
        for one in self.ones:
            if len(one) != len(self.dims):
                raise DimensionMismatchError(len(one), len(self.dims))
            if not all(1 <= i <= size for i, size in zip(one, self.dims)):
                raise ValueError(f"index {one} is outside of {self.dims}")

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return prod(self.dims)

    @property
    def weight(self) -> int:
        """The number of ones."""
        return len(self.ones)

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "BitMatrix":
        """
        Build a 2-D matrix from strings of ``0``/``1`` characters, top row first.

        Examples:
            >>> BitMatrix.from_rows(["10", "01"]).ones == {(1, 1), (2, 2)}
            True
        """
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("all rows need the same length")
        return cls(
            dims=(len(rows), width),
            ones={
                (i, j)
                for i, row in enumerate(rows, 1)
                for j, ch in enumerate(row, 1)
                if ch == "1"
            },
        )

    @classmethod
    def from_lines(cls, dims: Sequence[int], lines: Dict[Index, int]) -> "BitMatrix":
        """Inverse of :attr:`lines`; keys are 0-based prefixes."""
        ones = set()
        for prefix, mask in lines.items():
            while mask:
                low = mask & -mask
                ones.add(tuple(i + 1 for i in prefix) + (low.bit_length(),))
                mask ^= low
        return cls(dims=dims, ones=ones)

    @cached_property
    def lines(self) -> Dict[Index, int]:
        """0-based prefix (all axes but the last) to bitmask over the last axis."""
        lines: Dict[Index, int] = {}
        for one in self.ones:
            prefix = tuple(i - 1 for i in one[:-1])
            lines[prefix] = lines.get(prefix, 0) | (1 << (one[-1] - 1))
        return lines

    @property
    def rows(self) -> List[int]:
        """Row bitsets of a 2-D matrix, top row first."""
        if self.d != 2:
            raise DimensionMismatchError(self.d, 2)
        return [self.lines.get((i,), 0) for i in range(self.dims[0])]

    def to_rows(self) -> List[str]:
        return [
            "".join("1" if (row >> j) & 1 else "0" for j in range(self.dims[1]))
            for row in self.rows
        ]

    def bitstring(self) -> str:
        """All entries in lexicographic index order (row-major for 2-D)."""
        return "".join("1" if index in self.ones else "0" for index in self.indices())

    def indices(self) -> Iterable[Index]:
        def walk(prefix: Index, axis: int) -> Iterable[Index]:
            if axis == self.d:
                yield prefix
                return
            for i in range(1, self.dims[axis] + 1):
                yield from walk(prefix + (i,), axis + 1)

        return walk((), 0)
