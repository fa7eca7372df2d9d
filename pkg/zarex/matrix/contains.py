# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Submatrix containment by depth-first search over per-axis index maps.

Every axis but the last is assigned explicitly: the axes before the second-to-last by
enumerating increasing index tuples, the second-to-last one index at a time. The last axis is
never enumerated. Each one of the pattern narrows a bitset of admissible target indices for its
last-axis index (the AND of the host lines it lands on), and a strictly increasing choice exists
iff picking the lowest admissible index greedily succeeds. Masks only shrink as more indices are
assigned, so the greedy check also prunes partial assignments.
"""
from __future__ import annotations

from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple
from itertools import combinations, product

from ..errors import DimensionMismatchError
from ..types import BitMatrix, Index

Lines = Dict[Index, int]
AxisMaps = Tuple[Tuple[int, ...], ...]
# (pattern index, host index) pinned on each axis, 0-based
Pin = Optional[Tuple[Index, Index]]


def fit_last(masks: Sequence[int]) -> Optional[List[int]]:
    """Leftmost strictly increasing choice of one set bit per mask, if any."""
    pos = 0
    picks = []
    for mask in masks:
        rest = mask >> pos
        if not rest:
            return None
        pos += (rest & -rest).bit_length() - 1
        picks.append(pos)
        pos += 1
    return picks


def count_last(masks: Sequence[int], width: int) -> int:
    """Number of strictly increasing choices of one set bit per mask."""
    # ways[j]: choices so far whose last pick is below j
    ways = [1] * (width + 1)
    for mask in masks:
        acc = 0
        nxt = [0] * (width + 1)
        for pos in range(width):
            if (mask >> pos) & 1:
                acc += ways[pos]
            nxt[pos + 1] = acc
        ways = nxt
    return ways[width]


class SubmatrixMatcher:
    """
    Precomputed search plan for one pattern matrix, reusable against many hosts.

    Hosts are given as ``(dims, lines)`` with :attr:`BitMatrix.lines` semantics, so solvers can
    query their mutable partial fillings without building matrices.
    """

    def __init__(self, pattern: BitMatrix) -> None:
        self.pattern = pattern
        self.d = pattern.d
        self.dims = pattern.dims
        self.ones: List[Index] = sorted(tuple(i - 1 for i in one) for one in pattern.ones)
        self.groups: List[List[Tuple[Index, int]]] = [[] for _ in range(self.dims[-2])]
        for one in self.ones:
            self.groups[one[-2]].append((one[:-2], one[-1]))

    def _fits(self, dims: Sequence[int]) -> bool:
        if len(dims) != self.d:
            raise DimensionMismatchError(len(dims), self.d)
        return all(b <= a for a, b in zip(dims, self.dims))

    def _outer(self, dims: Sequence[int], pin: Pin) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        choices = []
        for axis in range(self.d - 2):
            options = combinations(range(dims[axis]), self.dims[axis])
            if pin is not None:
                at, to = pin[0][axis], pin[1][axis]
                options = [opt for opt in options if opt[at] == to]
            choices.append(options)
        return product(*choices)

    def _walk(
        self,
        dims: Sequence[int],
        lines: Lines,
        pin: Pin,
        visit: Callable[[AxisMaps, List[int]], bool],
    ) -> bool:
        width = dims[-1]
        start = [(1 << width) - 1] * self.dims[-1]
        row_pin = None
        if pin is not None:
            start[pin[0][-1]] &= 1 << pin[1][-1]
            row_pin = (pin[0][-2], pin[1][-2])
        if fit_last(start) is None:
            return False
        rows = self.dims[-2]
        host_rows = dims[-2]

        def assign(
            outer: Tuple[Tuple[int, ...], ...],
            masks: List[int],
            k: int,
            lo: int,
            chosen: List[int],
        ) -> bool:
            if k == rows:
                return visit(outer + (tuple(chosen),), masks)
            hi = host_rows - (rows - k)
            if row_pin is not None:
                at, to = row_pin
                if k == at:
                    lo, hi = max(lo, to), min(hi, to)
                elif k < at:
                    hi = min(hi, to - (at - k))
            for v in range(lo, hi + 1):
                narrowed = list(masks)
                for prefix, q in self.groups[k]:
                    key = tuple(outer[axis][i] for axis, i in enumerate(prefix)) + (v,)
                    narrowed[q] &= lines.get(key, 0)
                if fit_last(narrowed) is None:
                    continue
                chosen.append(v)
                if assign(outer, narrowed, k + 1, v + 1, chosen):
                    return True
                chosen.pop()
            return False

        for outer in self._outer(dims, pin):
            if assign(outer, start, 0, 0, []):
                return True
        return False

    def find(
        self, dims: Sequence[int], lines: Lines, through: Optional[Index] = None
    ) -> Optional[AxisMaps]:
        """
        Return 0-based per-axis index maps of one copy, or ``None``.

        With ``through`` (a 0-based host index), only copies that send some one of the pattern
        to that entry count.
        """
        if not self._fits(dims):
            return None
        found: List[AxisMaps] = []

        def visit(maps: AxisMaps, masks: List[int]) -> bool:
            found.append(maps + (tuple(fit_last(masks)),))
            return True

        if through is None:
            self._walk(dims, lines, None, visit)
        else:
            if not (lines.get(through[:-1], 0) >> through[-1]) & 1:
                return None
            for one in self.ones:
                if self._walk(dims, lines, (one, through), visit):
                    break
        return found[0] if found else None

    def count(self, dims: Sequence[int], lines: Lines) -> int:
        if not self._fits(dims):
            return 0
        total = 0

        def visit(maps: AxisMaps, masks: List[int]) -> bool:
            nonlocal total
            total += count_last(masks, dims[-1])
            return False

        self._walk(dims, lines, None, visit)
        return total


def _check_dims(host: BitMatrix, pattern: BitMatrix) -> None:
    if host.d != pattern.d:
        raise DimensionMismatchError(host.d, pattern.d)


def find_copy(host: BitMatrix, pattern: BitMatrix) -> Optional[AxisMaps]:
    """
    Locate a copy of ``pattern`` in ``host``.

    Returns:
        One strictly increasing 1-based index tuple per axis, mapping pattern index ``i`` on that
        axis to host index ``maps[axis][i - 1]``, or ``None`` if ``host`` avoids ``pattern``.
    """
    _check_dims(host, pattern)
    maps = SubmatrixMatcher(pattern).find(host.dims, host.lines)
    if maps is None:
        return None
    return tuple(tuple(i + 1 for i in axis) for axis in maps)


def matrix_contains(host: BitMatrix, pattern: BitMatrix) -> bool:
    """
    Whether some submatrix of ``host`` has ones wherever ``pattern`` does.

    Examples:
        >>> j22 = BitMatrix.from_rows(["11", "11"])
        >>> matrix_contains(BitMatrix.from_rows(["111", "111", "111"]), j22)
        True
        >>> matrix_contains(BitMatrix.from_rows(["10", "01"]), j22)
        False
    """
    return find_copy(host, pattern) is not None


def contains_through(host: BitMatrix, pattern: BitMatrix, entry: Index) -> bool:
    """Whether a copy of ``pattern`` uses the one of ``host`` at the 1-based ``entry``."""
    _check_dims(host, pattern)
    through = tuple(i - 1 for i in entry)
    return SubmatrixMatcher(pattern).find(host.dims, host.lines, through) is not None


def count_copies(host: BitMatrix, pattern: BitMatrix) -> int:
    """
    Number of per-axis index maps witnessing a copy. For all-ones patterns this is the number
    of ``(row subset, column subset)`` pairs.
    """
    _check_dims(host, pattern)
    return SubmatrixMatcher(pattern).count(host.dims, host.lines)
