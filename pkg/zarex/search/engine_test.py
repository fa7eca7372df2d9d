# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from itertools import product

import pytest

from .engine import BoxSearch, CellMap, SearchOracle, block_shapes


class LineCap(SearchOracle):
    """Forbids more than ``cap`` filled cells on any line of any axis."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.filled = set()

    def fresh(self) -> "LineCap":
        return LineCap(self.cap)

    def conflict(self, cell):
        for axis in range(len(cell)):
            same = sum(
                1
                for other in self.filled
                if all(a == b for k, (a, b) in enumerate(zip(cell, other)) if k != axis)
            )
            if same >= self.cap:
                return True
        return False

    def push(self, cell):
        self.filled.add(cell)

    def pop(self, cell):
        self.filled.remove(cell)


def brute_force(shape, cap):
    cells = list(product(*(range(1, s + 1) for s in shape)))
    best = None
    for bits in product((0, 1), repeat=len(cells)):
        oracle = LineCap(cap)
        ok = True
        for cell, bit in zip(cells, bits):
            if bit:
                if oracle.conflict(cell):
                    ok = False
                    break
                oracle.push(cell)
        if ok:
            ones = sum(bits)
            if best is None or ones > best[0]:
                best = (ones, bits)
    return best[0], frozenset(c for c, b in zip(cells, best[1]) if b)


def test_block_shapes():
    assert list(block_shapes((3, 4), (1, 1))) == [(2, 4), (1, 3)]
    assert list(block_shapes((3, 4), (3, 4))) == []
    assert list(block_shapes((2, 2, 2), (1, 2, 1))) == [(1, 2, 2), (1, 1, 1)]


def test_cell_map():
    assert CellMap.identity(2)((2, 3)) == (2, 3)
    to_region = CellMap(order=(1, 0), flip=(True, False), size=4)
    assert to_region((1, 1)) == (1, 4)
    assert to_region((4, 3)) == (3, 1)
    assert CellMap(order=(2, 0, 1), flip=(False,) * 3)((3, 1, 2)) == (1, 2, 3)


@pytest.mark.parametrize("shape,cap", [((3, 3), 1), ((3, 3), 2), ((2, 4), 1), ((2, 2, 2), 1)])
def test_matches_brute_force(shape, cap):
    value, cells = brute_force(shape, cap)
    result = BoxSearch(shape, LineCap(cap), CellMap.identity(len(shape))).solve()
    assert result.value == value
    # brute force keeps the first optimum in 0-before-1 order, which is the smallest one
    assert result.cells == cells


def test_canonical_is_lexicographically_smallest():
    result = BoxSearch((3, 3), LineCap(1), CellMap.identity(2)).solve()
    assert result.cells == {(1, 3), (2, 2), (3, 1)}


def test_search_leaves_oracle_empty():
    search = BoxSearch((3, 3), LineCap(2), CellMap.identity(2))
    search.solve()
    assert search.oracle.filled == set()


def test_row_order_keeps_value():
    plain = BoxSearch((3, 3), LineCap(2), CellMap.identity(2)).solve()
    ordered = BoxSearch((3, 3), LineCap(2), CellMap.identity(2), row_order=True).solve()
    assert ordered.value == plain.value == 6
    rows = [[int((i, j) in ordered.cells) for j in range(1, 4)] for i in range(1, 4)]
    assert rows == sorted(rows, reverse=True)


def test_box_values_are_shared():
    memo = {}
    BoxSearch((3, 3), LineCap(1), CellMap.identity(2), box_values=memo).solve()
    assert memo[(2, 3)] == 2
    assert memo[(1, 2)] == 1


def test_parallel_value_matches_serial():
    serial = BoxSearch((4, 4), LineCap(2), CellMap.identity(2)).solve()
    parallel = BoxSearch((4, 4), LineCap(2), CellMap.identity(2)).solve(threads=2)
    assert parallel.value == serial.value == 8
    assert parallel.cells == serial.cells
