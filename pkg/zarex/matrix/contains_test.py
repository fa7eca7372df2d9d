# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from itertools import combinations, product
import random

from hypothesis import given, settings, strategies as st
import pytest

from ..errors import DimensionMismatchError
from ..types import BitMatrix
from .contains import contains_through, count_copies, find_copy, fit_last, matrix_contains
from .ops import all_ones, blowup, identity, single_one

J22 = all_ones(2, 2)


def brute_copies(host, pattern):
    axes = [combinations(range(1, a + 1), b) for a, b in zip(host.dims, pattern.dims)]
    for maps in product(*axes):
        if all(tuple(m[i - 1] for m, i in zip(maps, one)) in host.ones for one in pattern.ones):
            yield maps


@st.composite
def matrices(draw, max_rows=5, max_cols=5, d=2):
    dims = [draw(st.integers(1, limit)) for limit in (max_rows, max_cols, 3)[:d]]
    cells = st.tuples(*(st.integers(1, size) for size in dims))
    return BitMatrix(dims=dims, ones=draw(st.sets(cells, max_size=12)))


def all_matrices(rows, cols):
    cells = list(product(range(1, rows + 1), range(1, cols + 1)))
    for bits in range(1 << len(cells)):
        yield BitMatrix(dims=(rows, cols), ones=[c for k, c in enumerate(cells) if bits >> k & 1])


def test_examples():
    a = BitMatrix.from_rows(["110", "011", "101"])
    assert matrix_contains(a, a)
    assert matrix_contains(all_ones(3, 3), J22)
    assert not matrix_contains(identity(2), J22)
    assert not matrix_contains(J22, all_ones(3, 1))


def test_fit_last():
    assert fit_last([0b110, 0b110]) == [1, 2]
    assert fit_last([0b100, 0b010]) is None
    assert fit_last([]) == []


def test_find_copy_returns_increasing_maps():
    host = BitMatrix.from_rows(["1001", "0000", "1001"])
    assert find_copy(host, J22) == ((1, 3), (1, 4))
    assert find_copy(identity(3), J22) is None


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        matrix_contains(identity(2), identity(2, d=3))


def test_exhaustive_small_hosts():
    patterns = list(all_matrices(2, 2)) + list(all_matrices(1, 3))
    for host in all_matrices(3, 3):
        for pattern in patterns:
            expected = next(brute_copies(host, pattern), None) is not None
            assert matrix_contains(host, pattern) == expected, (host.to_rows(), pattern.to_rows())


@settings(max_examples=300)
@given(matrices(5, 5), matrices(3, 3))
def test_agrees_with_brute_force(host, pattern):
    copies = list(brute_copies(host, pattern))
    assert matrix_contains(host, pattern) == bool(copies)
    assert count_copies(host, pattern) == len(copies)
    found = find_copy(host, pattern)
    assert found is None or found in copies


@settings(max_examples=100)
@given(matrices(3, 3, d=3), matrices(2, 2, d=3))
def test_agrees_with_brute_force_3d(host, pattern):
    assert count_copies(host, pattern) == len(list(brute_copies(host, pattern)))


@settings(max_examples=200)
@given(matrices(4, 4), matrices(2, 3), st.data())
def test_contains_through(host, pattern, data):
    if not host.ones:
        return
    entry = data.draw(st.sampled_from(sorted(host.ones)))
    expected = any(
        any(tuple(m[i - 1] for m, i in zip(maps, one)) == entry for one in pattern.ones)
        for maps in brute_copies(host, pattern)
    )
    assert contains_through(host, pattern, entry) == expected


def test_contains_through_needs_a_one():
    assert not contains_through(identity(3), single_one(), (1, 2))
    assert contains_through(identity(3), single_one(), (2, 2))


@given(matrices(4, 4))
def test_reflexive(matrix):
    assert matrix_contains(matrix, matrix)


@settings(max_examples=150)
@given(matrices(5, 5), matrices(3, 3), matrices(2, 2))
def test_transitive(a, b, c):
    if matrix_contains(a, b) and matrix_contains(b, c):
        assert matrix_contains(a, c)


@settings(max_examples=100)
@given(matrices(4, 4), matrices(2, 2), st.integers(0, 2))
def test_blowup_keeps_containment(a, b, k):
    if matrix_contains(a, b):
        assert matrix_contains(blowup(a, k), blowup(b, k))


def test_count_examples():
    assert count_copies(all_ones(3, 3), J22) == 9
    assert count_copies(identity(2), single_one()) == 2
    assert count_copies(identity(4), J22) == 0


def test_count_matches_quadruple_loop():
    rng = random.Random(6)
    for _ in range(20):
        host = BitMatrix(
            dims=(6, 6),
            ones={(i, j) for i in range(1, 7) for j in range(1, 7) if rng.random() < 0.5},
        )
        expected = sum(
            1
            for r1, r2 in combinations(range(1, 7), 2)
            for c1, c2 in combinations(range(1, 7), 2)
            if {(r1, c1), (r1, c2), (r2, c1), (r2, c2)} <= host.ones
        )
        assert count_copies(host, J22) == expected
        assert (expected == 0) == (not matrix_contains(host, J22))
