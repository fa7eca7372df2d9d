# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from fractions import Fraction
from itertools import combinations
import json
import pathlib

import pytest

from ..errors import GuardExceededError, SolverError
from ..matrix import all_ones, identity, matrix_contains, reflect, rotate90, single_one
from ..types import BitMatrix, BoundKind
from ..verify.oracle import zarankiewicz
from .solver import (
    default_probability,
    deletion_lower_bound,
    ex_exact,
    ex_lower_heuristic,
    ex_lower_random_deletion,
    expected_copies,
)

J22 = all_ones(2, 2)
FIXTURES = pathlib.Path(__file__).parent.parent / "verify" / "fixtures" / "zarankiewicz.json"


@pytest.fixture(scope="module")
def fixture_table():
    return {int(n): v for n, v in json.loads(FIXTURES.read_text())["values"].items()}


def test_fixture_table_matches_oracle(fixture_table):
    for n in range(1, 6):
        assert fixture_table[n] == zarankiewicz(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_zarankiewicz_values(n, fixture_table):
    record = ex_exact(n, J22)
    assert record.bound == BoundKind.EXACT
    assert record.value == fixture_table[n]
    assert record.certificate.weight == record.value
    assert not matrix_contains(record.certificate, J22)


def test_single_one_pattern():
    record = ex_exact(40, single_one())
    assert record.value == 0
    assert record.certificate.dims == (40, 40)


def test_canonical_certificate():
    # the smallest optimum in row-major order puts zeros as early as possible
    assert ex_exact(3, J22).certificate.to_rows() == ["011", "101", "110"]
    assert ex_exact(2, J22).certificate.to_rows() == ["01", "11"]


def test_guard():
    with pytest.raises(GuardExceededError):
        ex_exact(7, J22)
    with pytest.raises(GuardExceededError):
        ex_exact(3, J22, max_cells={2: 4})


def test_symmetry_breaking():
    plain = ex_exact(4, J22)
    broken = ex_exact(4, J22, symmetry_breaking=True)
    assert broken.value == plain.value
    assert broken.symmetry_breaking
    rows = broken.certificate.to_rows()
    assert rows == sorted(rows, reverse=True)
    with pytest.raises(SolverError):
        ex_exact(4, identity(2), symmetry_breaking=True)


def test_parallel_matches_serial():
    serial = ex_exact(5, J22)
    parallel = ex_exact(5, J22, threads=2)
    assert parallel.certificate == serial.certificate


def test_monotone_and_symmetric():
    pattern = BitMatrix.from_rows(["110", "011"])
    values = [ex_exact(n, pattern).value for n in range(1, 6)]
    assert values == sorted(values)
    for image in (reflect(pattern, 0), reflect(pattern, 1), rotate90(pattern)):
        assert [ex_exact(n, image).value for n in range(1, 6)] == values
    # multiple ones force at least n
    assert all(v >= n for n, v in enumerate(values, 1))


def test_three_dimensional():
    record = ex_exact(2, all_ones(2, 2, 2), d=3)
    assert record.value == 7
    assert ex_exact(3, identity(2, d=3), d=3).value >= 9


def test_heuristic():
    record = ex_lower_heuristic(6, J22, seed=3)
    assert record.bound == BoundKind.LOWER
    assert 6 <= record.value <= 16
    assert not matrix_contains(record.certificate, J22)
    assert ex_lower_heuristic(6, J22, seed=3).certificate == record.certificate
    assert ex_lower_heuristic(6, J22, seed=3, threads=2).certificate == record.certificate
    for n in range(2, 6):
        assert ex_lower_heuristic(n, J22, seed=1).value <= ex_exact(n, J22).value


def test_default_probability():
    assert default_probability(64, 2) == Fraction(1, 16)
    p = default_probability(10, 2)
    assert p.denominator == 2**20
    assert p**3 * 100 <= 1 < (p + Fraction(1, 2**20)) ** 3 * 100


def test_random_deletion():
    record = ex_lower_random_deletion(20, 2, seed=5)
    assert not matrix_contains(record.certificate, J22)
    assert record.p == default_probability(20, 2)
    again = ex_lower_random_deletion(20, 2, seed=5)
    assert again.certificate == record.certificate
    assert ex_lower_random_deletion(20, 2, p=0, seed=5).value == 0
    clamped = ex_lower_random_deletion(3, 2, p=2, seed=5)
    assert clamped.p == 1
    assert clamped.value <= 6
    assert not matrix_contains(clamped.certificate, J22)


def test_deletion_bounds():
    assert expected_copies(4, 2, 1) == 36
    assert expected_copies(64, 2, Fraction(1, 16)) == Fraction(2016**2, 16**4)
    assert deletion_lower_bound(64, 2) == 128
    # exact bound of the three-by-three case is not rational
    assert deletion_lower_bound(3, 3) >= Fraction(1, 2) * Fraction(3) ** Fraction(3, 2)


def test_brute_force_small_patterns():
    pattern = BitMatrix.from_rows(["10", "01"])
    for n in range(1, 4):
        cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        best = max(
            k
            for k in range(len(cells) + 1)
            for ones in combinations(cells, k)
            if not matrix_contains(BitMatrix(dims=(n, n), ones=ones), pattern)
        )
        assert ex_exact(n, pattern).value == best
