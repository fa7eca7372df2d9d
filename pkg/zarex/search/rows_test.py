# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from itertools import product

import pytest

from ..matrix import matrix_contains
from ..types import BitMatrix
from .rows import RowSearch, row_tables

J22 = BitMatrix.from_rows(["11", "11"])


def brute_force(rows, width, pattern):
    """The optimum and the first optimal filling in row-major order, as row strings."""
    best = None
    for bits in product("01", repeat=rows * width):
        text = "".join(bits)
        ones = text.count("1")
        if best is not None and ones <= best[0]:
            continue
        lines = [text[i * width : (i + 1) * width] for i in range(rows)]
        if not matrix_contains(BitMatrix.from_rows(lines), pattern):
            best = (ones, lines)
    return best


def as_rows(cells, rows, width):
    return [
        "".join("1" if (i, j) in cells else "0" for j in range(1, width + 1))
        for i in range(1, rows + 1)
    ]


@pytest.mark.parametrize(
    "pattern",
    [
        ["11", "11"],
        ["10", "01"],
        ["01", "10"],
        ["00", "11"],
        ["110", "011"],
        ["11"],
        ["101"],
    ],
)
@pytest.mark.parametrize("shape", [(3, 3), (3, 4), (4, 3)])
def test_against_brute_force(pattern, shape):
    pattern = BitMatrix.from_rows(pattern)
    rows, width = shape
    value, lines = brute_force(rows, width, pattern)
    result = RowSearch(rows, row_tables(pattern, width)).solve()
    assert result.value == value
    assert as_rows(result.cells, rows, width) == lines


def test_tables():
    tables = row_tables(J22, 3)
    assert tables is row_tables(J22, 3)
    # a single row never holds two pattern rows
    assert tables.admissible == (1 << 8) - 1
    assert not tables.follows[0b011] >> 0b111 & 1
    assert tables.follows[0b011] >> 0b101 & 1
    assert tables.lex_order[:4] == (0b000, 0b100, 0b010, 0b110)
    assert tables.heaviest(1 << 0b101 | 1 << 0b001) == 2
    assert tables.heaviest(0) == -1
    assert row_tables(BitMatrix.from_rows(["10", "01"]), 3).spread == 0
    with pytest.raises(ValueError):
        row_tables(BitMatrix.from_rows(["1", "1", "1"]), 3)


@pytest.mark.parametrize("n, value", [(4, 9), (5, 12), (6, 16)])
def test_spread_bound_is_tight_for_rectangles(n, value):
    tables = row_tables(J22, n)
    assert tables.spread == 2
    assert tables.subsets == n * (n - 1) // 2
    assert tables.spread_bound(n, tables.subsets, n) == value
    # with no free pair left every row holds at most one
    assert tables.spread_bound(3, 0, n) == 3


def test_row_order():
    result = RowSearch(4, row_tables(J22, 4), row_order=True).solve()
    assert result.value == 9
    rows = as_rows(result.cells, 4, 4)
    assert rows == sorted(rows, reverse=True)


def test_rectangle_free_values():
    assert RowSearch(6, row_tables(J22, 6)).maximize() == 16
    assert RowSearch(3, row_tables(J22, 7)).maximize() == 10


def test_parallel_matches_serial():
    tables = row_tables(J22, 5)
    serial = RowSearch(5, tables).solve()
    parallel = RowSearch(5, tables).solve(threads=2)
    assert (parallel.value, parallel.cells) == (serial.value, serial.cells)
