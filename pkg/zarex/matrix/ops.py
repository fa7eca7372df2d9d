# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from itertools import product

from ..errors import DimensionMismatchError
from ..types import BitMatrix


def all_ones(*dims: int) -> BitMatrix:
    """``J_{a,b}`` and its higher-dimensional analogues."""
    return BitMatrix(dims=dims, ones=product(*(range(1, size + 1) for size in dims)))


def identity(n: int, d: int = 2) -> BitMatrix:
    return BitMatrix(dims=(n,) * d, ones=((i,) * d for i in range(1, n + 1)))


def single_one(d: int = 2) -> BitMatrix:
    return BitMatrix(dims=(1,) * d, ones=[(1,) * d])


def blowup(matrix: BitMatrix, k: int) -> BitMatrix:
    """
    ``S(M, k)``: insert ``k`` all-zero hyperplanes between consecutive indices on every axis.

    Examples:
        >>> blowup(all_ones(2, 2), 1).to_rows()
        ['101', '000', '101']
    """
    if k < 0:
        raise ValueError(f"blowup needs k >= 0, got {k}")
    step = k + 1
    return BitMatrix(
        dims=(size + k * (size - 1) for size in matrix.dims),
        ones=(tuple(1 + (i - 1) * step for i in one) for one in matrix.ones),
    )


def reflect(matrix: BitMatrix, axis: int) -> BitMatrix:
    """Reverse the indices on one axis (``axis=1`` mirrors the columns of a 2-D matrix)."""
    if not 0 <= axis < matrix.d:
        raise DimensionMismatchError(axis, matrix.d)
    size = matrix.dims[axis]
    return BitMatrix(
        dims=matrix.dims,
        ones=(
            tuple(size + 1 - i if a == axis else i for a, i in enumerate(one))
            for one in matrix.ones
        ),
    )


def _require_2d(matrix: BitMatrix) -> None:
    if matrix.d != 2:
        raise DimensionMismatchError(matrix.d, 2)


def transpose(matrix: BitMatrix) -> BitMatrix:
    _require_2d(matrix)
    rows, cols = matrix.dims
    return BitMatrix(dims=(cols, rows), ones=((j, i) for i, j in matrix.ones))


def rotate90(matrix: BitMatrix) -> BitMatrix:
    """
    Quarter turn counterclockwise, matching a counterclockwise turn of the plane: the
    rightmost column becomes the top row.
    """
    _require_2d(matrix)
    rows, cols = matrix.dims
    return BitMatrix(dims=(cols, rows), ones=((cols + 1 - j, i) for i, j in matrix.ones))


def lift_matrix(matrix: BitMatrix) -> BitMatrix:
    """Append an axis of length one."""
    return BitMatrix(dims=matrix.dims + (1,), ones=(one + (1,) for one in matrix.ones))
