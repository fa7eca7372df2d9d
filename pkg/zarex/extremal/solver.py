# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Dict, Optional, Tuple
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from math import comb
import logging
import random
import time

from ..errors import CertificateError, DimensionMismatchError, GuardExceededError, SolverError
from ..matrix import SubmatrixMatcher, all_ones, matrix_contains
from ..search import BoxSearch, CellMap, RowSearch, SearchOracle, row_tables
from ..types import (
    BitMatrix,
    BoundKind,
    ExMode,
    ExtremalRecord,
    Index,
    RatLike,
    RecordKind,
    as_rat,
    iroot,
    pattern_id,
    root_upper,
)
from ..util.logging import TraceLogger

log: TraceLogger = logging.getLogger("zarex.extremal")

DEFAULT_EXACT_MAX_CELLS: Dict[int, int] = {2: 36, 3: 27}


class MatrixOracle(SearchOracle):
    """Avoidance of a pattern matrix inside an ``n^d`` host that is being filled."""

    def __init__(self, pattern: BitMatrix, dims: Tuple[int, ...]) -> None:
        self.pattern = pattern
        self.dims = dims
        self.matcher = SubmatrixMatcher(pattern)
        self.lines: Dict[Index, int] = {}

    def fresh(self) -> MatrixOracle:
        return MatrixOracle(self.pattern, self.dims)

    def conflict(self, cell: Index) -> bool:
        self.push(cell)
        try:
            through = tuple(i - 1 for i in cell)
            return self.matcher.find(self.dims, self.lines, through) is not None
        finally:
            self.pop(cell)

    def push(self, cell: Index) -> None:
        key = tuple(i - 1 for i in cell[:-1])
        self.lines[key] = self.lines.get(key, 0) | (1 << (cell[-1] - 1))

    def pop(self, cell: Index) -> None:
        key = tuple(i - 1 for i in cell[:-1])
        mask = self.lines[key] & ~(1 << (cell[-1] - 1))
        if mask:
            self.lines[key] = mask
        else:
            del self.lines[key]

    def matrix(self) -> BitMatrix:
        return BitMatrix.from_lines(self.dims, self.lines)


def certify(certificate: BitMatrix, pattern: BitMatrix) -> BitMatrix:
    """Re-check that a certificate avoids the pattern before it is reported."""
    if matrix_contains(certificate, pattern):
        raise CertificateError(
            f"certificate with {certificate.weight} ones contains the forbidden pattern"
        )
    return certificate


def _check_input(n: int, pattern: BitMatrix, d: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if pattern.d != d:
        raise DimensionMismatchError(pattern.d, d)


def _record(
    n: int,
    d: int,
    pattern: BitMatrix,
    certificate: BitMatrix,
    bound: BoundKind,
    mode: ExMode,
    start: float,
    **kwargs,
) -> ExtremalRecord:
    return ExtremalRecord(
        kind=RecordKind.EX,
        pattern_id=pattern_id(pattern),
        n=Fraction(n),
        d=d,
        value=certificate.weight,
        bound=bound,
        method=mode.value,
        certificate=certificate,
        elapsed_ms=int((time.monotonic() - start) * 1000),
        **kwargs,
    )


def ex_exact(
    n: int,
    pattern: BitMatrix,
    d: int = 2,
    *,
    symmetry_breaking: bool = False,
    threads: int = 1,
    max_cells: Optional[Dict[int, int]] = None,
) -> ExtremalRecord:
    """
    ``ex(n, M, d)`` by branch and bound.

    The certificate is the lexicographically smallest optimal matrix in row-major order (under
    the row-order constraint when ``symmetry_breaking`` is set), independent of ``threads``.

    Raises:
        GuardExceededError: ``n^d`` is above the configured limit for ``d``.
        SolverError: symmetry breaking was requested for a pattern whose rows differ.
    """
    _check_input(n, pattern, d)
    start = time.monotonic()
    dims = (n,) * d
    if pattern.weight == 0:
        raise SolverError("the all-zero pattern is contained in every host")
    if pattern.weight == 1:
        # every one of the host would be a copy
        return _record(n, d, pattern, BitMatrix(dims=dims), BoundKind.EXACT, ExMode.EXACT, start)
    limit = (max_cells or DEFAULT_EXACT_MAX_CELLS).get(d, 0)
    if n**d > limit:
        raise GuardExceededError(f"ex_exact(n={n}, d={d})", n**d, limit)
    if symmetry_breaking and (d != 2 or len(set(pattern.rows)) != 1):
        raise SolverError(
            "row-order symmetry breaking is only sound for 2-D patterns whose rows are all equal"
        )
    if d == 2 and pattern.dims[0] <= 2:
        search = RowSearch(n, row_tables(pattern, n), row_order=symmetry_breaking)
    else:
        search = BoxSearch(
            dims,
            MatrixOracle(pattern, dims),
            CellMap.identity(d),
            row_order=symmetry_breaking,
        )
    result = search.solve(threads=threads)
    certificate = certify(BitMatrix(dims=dims, ones=result.cells), pattern)
    log.debug("ex(%d) = %d for %s after %d nodes", n, result.value, pattern.dims, result.nodes)
    return _record(
        n,
        d,
        pattern,
        certificate,
        BoundKind.EXACT,
        ExMode.EXACT,
        start,
        symmetry_breaking=symmetry_breaking,
    )


def _greedy_job(
    n: int, d: int, pattern: BitMatrix, seed: int, index: int, swap_rounds: int
) -> BitMatrix:
    rng = random.Random(f"{seed}/{index}")
    dims = (n,) * d
    oracle = MatrixOracle(pattern, dims)
    cells = list(product(range(1, n + 1), repeat=d))
    rng.shuffle(cells)
    ones = set()
    for cell in cells:
        if not oracle.conflict(cell):
            oracle.push(cell)
            ones.add(cell)
    for _ in range(swap_rounds):
        improved = False
        for cell in rng.sample(sorted(ones), len(ones)):
            oracle.pop(cell)
            ones.remove(cell)
            added = []
            for other in cells:
                if other != cell and other not in ones and not oracle.conflict(other):
                    oracle.push(other)
                    ones.add(other)
                    added.append(other)
            if not added:
                oracle.push(cell)
                ones.add(cell)
            elif len(added) > 1:
                improved = True
        if not improved:
            break
    return BitMatrix(dims=dims, ones=ones)


def ex_lower_heuristic(
    n: int,
    pattern: BitMatrix,
    d: int = 2,
    seed: int = 0,
    *,
    restarts: int = 4,
    swap_rounds: int = 8,
    threads: int = 1,
) -> ExtremalRecord:
    """
    A lower bound on ``ex(n, M, d)`` from seeded greedy fills improved by one-for-many swaps.

    Each restart ``i`` has its own generator seeded from ``(seed, i)``; the best restart wins and
    ties go to the smallest bitstring, so the result does not depend on ``threads``.
    """
    _check_input(n, pattern, d)
    start = time.monotonic()
    args = [(n, d, pattern, seed, index, swap_rounds) for index in range(max(1, restarts))]
    if threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            candidates = list(pool.map(_greedy_job, *zip(*args)))
    else:
        candidates = [_greedy_job(*job) for job in args]
    best = min(candidates, key=lambda matrix: (-matrix.weight, matrix.bitstring()))
    certify(best, pattern)
    return _record(
        n,
        d,
        pattern,
        best,
        BoundKind.LOWER,
        ExMode.HEURISTIC,
        start,
        seed=seed,
        restarts=restarts,
    )


def default_probability(n: int, r: int, bits: int = 20) -> Fraction:
    """
    ``n^(-2/(r+1))``, exact when it is rational and otherwise rounded down to a multiple of
    ``2^-bits``.
    """
    square = n * n
    root = iroot(square, r + 1)
    if root ** (r + 1) == square:
        return Fraction(1, root)
    return Fraction(iroot((1 << (bits * (r + 1))) // square, r + 1), 1 << bits)


def ex_lower_random_deletion(
    n: int,
    r: int,
    p: Optional[RatLike] = None,
    seed: int = 0,
    *,
    bits: int = 20,
) -> ExtremalRecord:
    """
    Sample every entry of an ``n × n`` matrix with probability ``p`` and delete one one from
    every remaining copy of ``J_{r,r}``.

    ``p`` is clamped to ``[0, 1]`` and quantised to ``round(p·2^bits) / 2^bits``; entry ``(i, j)``
    (row-major order) is a one iff the next ``bits`` random bits are below that numerator.
    """
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    start = time.monotonic()
    pattern = all_ones(r, r)
    if p is None:
        p = default_probability(n, r, bits)
    p = min(max(as_rat(p), Fraction(0)), Fraction(1))
    threshold = round(p * (1 << bits))
    rng = random.Random(seed)
    lines: Dict[Index, int] = {}
    for i in range(n):
        for j in range(n):
            if rng.getrandbits(bits) < threshold:
                lines[(i,)] = lines.get((i,), 0) | (1 << j)
    matcher = SubmatrixMatcher(pattern)
    dims = (n, n)
    deleted = 0
    while (maps := matcher.find(dims, lines)) is not None:
        row, col = maps[0][0], maps[1][0]
        lines[(row,)] &= ~(1 << col)
        deleted += 1
    certificate = certify(BitMatrix.from_lines(dims, lines), pattern)
    log.debug("Random deletion n=%d seed=%d deleted %d ones", n, seed, deleted)
    return _record(
        n,
        2,
        pattern,
        certificate,
        BoundKind.LOWER,
        ExMode.RANDOM_DELETION,
        start,
        seed=seed,
        p=Fraction(threshold, 1 << bits),
    )


def expected_copies(n: int, r: int, p: RatLike) -> Fraction:
    """``p^(r²)·C(n, r)²``: the expected number of ``J_{r,r}`` copies before deletion."""
    return as_rat(p) ** (r * r) * comb(n, r) ** 2


def deletion_lower_bound(n: int, r: int) -> Fraction:
    """``½·n^(2 − 2/(r+1))`` with the root rounded up."""
    return root_upper(Fraction(n ** (2 * r)), r + 1) / 2
