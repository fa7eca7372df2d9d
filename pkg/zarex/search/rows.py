# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Branch and bound over whole rows of a 2-D host, for patterns with at most two rows.

A copy of such a pattern uses at most two host rows, so a filling avoids it iff every row
avoids it on its own and every ordered pair of rows does. Both relations are tabulated once per
host width as bitsets indexed by row mask, and a node narrows the rows that may still follow
with a single AND.

A node with ``k`` rows left is bounded by the smallest of: the optimum of a ``k``-row host, ``k``
times the heaviest row still allowed, and, for an all-ones ``2 × t`` pattern, a count of the
column ``t``-subsets no placed row covers yet (two rows may never share one).
"""
from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Tuple
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, repeat
from math import comb
import logging
import time

from attr import dataclass

from ..matrix import SubmatrixMatcher
from ..types import BitMatrix
from ..util.logging import TraceLogger
from .engine import SearchResult

log: TraceLogger = logging.getLogger("zarex.search")


def _members(bitset: int) -> Iterator[int]:
    while bitset:
        low = bitset & -bitset
        yield low.bit_length() - 1
        bitset ^= low


def _bitset(values) -> int:
    out = 0
    for value in values:
        out |= 1 << value
    return out


@dataclass(frozen=True)
class RowTables:
    """
    Row relations of one pattern at one host width.

    Rows are masks with bit ``j`` set for column ``j + 1``; sets of rows are bitsets indexed by
    mask. ``spread`` is ``t`` for an all-ones ``2 × t`` pattern and 0 otherwise.
    """

    width: int
    admissible: int
    follows: Tuple[int, ...]
    by_weight: Tuple[int, ...]
    lex_order: Tuple[int, ...]
    up_to: Tuple[int, ...]
    spread: int
    covers: Tuple[int, ...]
    subsets: int

    def heaviest(self, allowed: int) -> int:
        """The most ones an allowed row has, or -1 when no row is allowed."""
        for weight in range(self.width, -1, -1):
            if allowed & self.by_weight[weight]:
                return weight
        return -1

    def heavy_first(self, allowed: int) -> Iterator[int]:
        for weight in range(self.width, -1, -1):
            yield from _members(allowed & self.by_weight[weight])

    def spread_bound(self, rows: int, free: int, heaviest: int) -> int:
        """
        Most ones ``rows`` rows of at most ``heaviest`` ones can hold when they may use only
        ``free`` column ``t``-subsets between them.
        """
        t = self.spread
        level = min(t - 1, heaviest)
        total = rows * level
        while level < heaviest:
            # raising a row from ``level`` ones covers comb(level, t - 1) new subsets
            cost = comb(level, t - 1)
            raised = rows if cost == 0 else min(rows, free // cost)
            total += raised
            free -= raised * cost
            if raised < rows:
                break
            level += 1
        return total


@lru_cache(maxsize=32)
def row_tables(pattern: BitMatrix, width: int) -> RowTables:
    if pattern.d != 2 or pattern.dims[0] > 2:
        raise ValueError(f"row tables need at most two pattern rows, got {pattern.dims}")
    matcher = SubmatrixMatcher(pattern)
    masks = range(1 << width)

    def avoids(*rows: int) -> bool:
        lines = {(i,): row for i, row in enumerate(rows) if row}
        return matcher.find((len(rows), width), lines) is None

    lex_order = tuple(sorted(masks, key=lambda mask: format(mask, f"0{width}b")[::-1]))
    up_to = [0] * len(lex_order)
    seen = 0
    for mask in lex_order:
        seen |= 1 << mask
        up_to[mask] = seen
    spread = pattern.dims[1] if pattern.weight == 2 * pattern.dims[1] == pattern.size else 0
    subsets = list(combinations(range(width), spread)) if spread else []
    return RowTables(
        width=width,
        admissible=_bitset(a for a in masks if avoids(a)),
        follows=tuple(_bitset(b for b in masks if avoids(a, b)) for a in masks),
        by_weight=tuple(
            _bitset(a for a in masks if a.bit_count() == weight) for weight in range(width + 1)
        ),
        lex_order=lex_order,
        up_to=tuple(up_to),
        spread=spread,
        covers=tuple(
            _bitset(k for k, subset in enumerate(subsets) if all(a >> c & 1 for c in subset))
            for a in masks
        ),
        subsets=len(subsets),
    )


class RowSearch:
    """
    Exact maximisation over ``rows × tables.width`` hosts, one row mask per level.

    Args:
        rows: Number of host rows.
        tables: Row relations of the pattern at the host width.
        box_values: Optima of hosts with fewer rows, shared with sub-searches.
        row_order: Only admit fillings whose rows are non-increasing as bitstrings.
    """

    def __init__(
        self,
        rows: int,
        tables: RowTables,
        box_values: Optional[Dict[int, int]] = None,
        row_order: bool = False,
    ) -> None:
        self.rows = rows
        self.tables = tables
        self.box_values = {0: 0} if box_values is None else box_values
        self.row_order = row_order
        self.chosen: List[int] = []
        self.nodes = 0

    def box_value(self, rows: int) -> int:
        try:
            return self.box_values[rows]
        except KeyError:
            pass
        sub = RowSearch(rows, self.tables, self.box_values, self.row_order)
        value = sub.maximize()
        self.box_values[rows] = value
        log.trace(
            "%d rows of width %d hold at most %d (%d nodes)",
            rows,
            self.tables.width,
            value,
            sub.nodes,
        )
        return value

    def _bound(self, left: int, allowed: int, covered: int) -> int:
        heaviest = self.tables.heaviest(allowed)
        if heaviest < 0:
            return -1
        bound = left * heaviest
        if left < self.rows:
            bound = min(bound, self.box_value(left))
        if self.tables.spread:
            free = self.tables.subsets - covered.bit_count()
            bound = min(bound, self.tables.spread_bound(left, free, heaviest))
        return bound

    def _after(self, allowed: int, mask: int) -> int:
        allowed &= self.tables.follows[mask]
        if self.row_order:
            allowed &= self.tables.up_to[mask]
        return allowed

    def greedy(self) -> int:
        """The heaviest allowed row at every level, or 0 if that runs into a dead end."""
        allowed, ones = self.tables.admissible, 0
        for _ in range(self.rows):
            mask = next(self.tables.heavy_first(allowed), None)
            if mask is None:
                return 0
            ones += mask.bit_count()
            allowed = self._after(allowed, mask)
        return ones

    def _maximize(self, left: int, allowed: int, covered: int, ones: int, best: int) -> int:
        self.nodes += 1
        if left == 0:
            return max(best, ones)
        if ones + self._bound(left, allowed, covered) <= best:
            return best
        for mask in self.tables.heavy_first(allowed):
            best = self._maximize(
                left - 1,
                self._after(allowed, mask),
                covered | self.tables.covers[mask],
                ones + mask.bit_count(),
                best,
            )
        return best

    def maximize(self, threads: int = 1) -> int:
        """The optimum value."""
        for rows in range(1, self.rows):
            self.box_value(rows)
        best = self.greedy()
        allowed = self.tables.admissible
        if best == self._bound(self.rows, allowed, 0):
            return best
        if threads > 1 and self.rows > 1:
            firsts = list(self.tables.heavy_first(allowed))
            log.debug("Splitting %d first rows over %d workers", len(firsts), threads)
            with ProcessPoolExecutor(max_workers=threads) as pool:
                return max(best, *pool.map(run_first_row, repeat(self), firsts, repeat(best)))
        return self._maximize(self.rows, allowed, 0, 0, best)

    def _canonical(self, left: int, allowed: int, covered: int, ones: int, target: int) -> bool:
        self.nodes += 1
        if left == 0:
            return ones >= target
        if ones + self._bound(left, allowed, covered) < target:
            return False
        for mask in self.tables.lex_order:
            if not allowed >> mask & 1:
                continue
            self.chosen.append(mask)
            after = self._after(allowed, mask)
            covers = covered | self.tables.covers[mask]
            if self._canonical(left - 1, after, covers, ones + mask.bit_count(), target):
                return True
            self.chosen.pop()
        return False

    def canonical(self, target: int) -> frozenset:
        """The lexicographically smallest filling with ``target`` ones, as cells."""
        self.chosen = []
        if not self._canonical(self.rows, self.tables.admissible, 0, 0, target):
            raise RuntimeError(f"no {self.rows}-row filling reaches {target}")
        return frozenset(
            (i, j + 1) for i, mask in enumerate(self.chosen, 1) for j in _members(mask)
        )

    def solve(self, threads: int = 1) -> SearchResult:
        start = time.monotonic()
        value = self.maximize(threads)
        log.trace("Maximised %d rows to %d after %d nodes", self.rows, value, self.nodes)
        cells = self.canonical(value)
        return SearchResult(
            value=value,
            cells=cells,
            nodes=self.nodes,
            elapsed_ms=int((time.monotonic() - start) * 1000),
        )


def run_first_row(search: RowSearch, mask: int, best: int) -> int:
    """Worker entry point: maximise below a fixed first row."""
    tables = search.tables
    return search._maximize(
        search.rows - 1,
        search._after(tables.admissible, mask),
        tables.covers[mask],
        mask.bit_count(),
        best,
    )
