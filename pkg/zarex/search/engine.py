# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Exact maximisation of the number of ones in a box, subject to an avoidance oracle.

Positions are visited in lexicographic order of a *search index* and translated to the caller's
cells by a :class:`CellMap`. Every position carries a static bound on what the positions from it
onwards can contribute: the unvisited part of the box after a position splits into full
sub-boxes, one per level of the lexicographic order, and every sub-box of an avoiding filling
avoids the pattern, so it holds at most the optimum of its own shape. Those optima are computed
by recursive searches on the smaller shapes and shared through a memo.

The search runs in two phases. The first one maximises (1 before 0, starting from a greedy
incumbent). The second one walks the tree 0 before 1 with the optimum as its target, so the
first leaf it reaches is the lexicographically smallest optimal filling.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from functools import cached_property
from itertools import product, repeat
import logging
import time

from attr import dataclass

from ..types import Index
from ..util.logging import TraceLogger

log: TraceLogger = logging.getLogger("zarex.search")


class SearchOracle(ABC):
    """
    Incremental avoidance test. The engine announces every cell it fills with :meth:`push` and
    withdraws it with :meth:`pop`; :meth:`conflict` asks whether filling one more cell would
    complete a copy of the forbidden pattern.
    """

    @abstractmethod
    def fresh(self) -> SearchOracle:
        """An oracle for the same pattern and host with nothing filled."""

    @abstractmethod
    def conflict(self, cell: Index) -> bool:
        pass

    @abstractmethod
    def push(self, cell: Index) -> None:
        pass

    @abstractmethod
    def pop(self, cell: Index) -> None:
        pass


@dataclass(frozen=True)
class CellMap:
    """
    Maps a 1-based search index to a cell: search axis ``k`` becomes cell axis ``order[k]``,
    counted from the far end (``size + 1 - i``) when ``flip[k]`` is set.
    """

    order: Tuple[int, ...]
    flip: Tuple[bool, ...]
    size: int = 0

    @classmethod
    def identity(cls, d: int) -> CellMap:
        return cls(tuple(range(d)), (False,) * d)

    def __call__(self, index: Index) -> Index:
        cell = [0] * len(index)
        for k, value in enumerate(index):
            cell[self.order[k]] = self.size + 1 - value if self.flip[k] else value
        return tuple(cell)


@dataclass(frozen=True)
class SearchResult:
    value: int
    cells: frozenset
    nodes: int
    elapsed_ms: int


def block_shapes(shape: Sequence[int], index: Index) -> Iterable[Tuple[int, ...]]:
    """Shapes of the full sub-boxes that follow ``index`` in lexicographic order."""
    for level in range(len(shape)):
        rest = shape[level] - index[level]
        if rest > 0:
            yield (1,) * level + (rest,) + tuple(shape[level + 1 :])


class BoxSearch:
    """
    Branch and bound over the cells of one box shape.

    Args:
        shape: The search box, one length per search axis.
        oracle: Avoidance oracle in cell coordinates. The search owns it.
        cell_map: Search index to cell translation.
        box_values: Memo of optimal values per shape, shared with sub-searches.
        row_order: Only admit fillings whose rows (2-D search boxes) are non-increasing as
            bitstrings. Sound only when permuting rows never creates a copy.
    """

    def __init__(
        self,
        shape: Sequence[int],
        oracle: SearchOracle,
        cell_map: CellMap,
        box_values: Optional[Dict[Tuple[int, ...], int]] = None,
        row_order: bool = False,
    ) -> None:
        self.shape = tuple(shape)
        self.oracle = oracle
        self.cell_map = cell_map
        self.box_values = {} if box_values is None else box_values
        self.row_order = row_order and len(self.shape) == 2
        self.positions: List[Index] = list(product(*(range(1, s + 1) for s in self.shape)))
        self.cells: List[Index] = [cell_map(index) for index in self.positions]
        self.size = len(self.positions)
        self.bits = [0] * self.size
        self.nodes = 0

    def box_value(self, shape: Tuple[int, ...]) -> int:
        try:
            return self.box_values[shape]
        except KeyError:
            pass
        sub = BoxSearch(shape, self.oracle.fresh(), self.cell_map, self.box_values)
        value = sub.maximize()
        self.box_values[shape] = value
        log.trace("Box %s holds at most %d (%d nodes)", shape, value, sub.nodes)
        return value

    @cached_property
    def bound(self) -> List[int]:
        """``bound[p]``: most ones positions ``p..end`` can hold given the box optima."""
        bound = [0] * (self.size + 1)
        for p, index in enumerate(self.positions):
            bound[p] = 1 + sum(self.box_value(shape) for shape in block_shapes(self.shape, index))
        return bound

    def _allowed(self, p: int, bit: int) -> bool:
        if not self.row_order or bit == 0:
            return True
        width = self.shape[1]
        row = p // width
        if row == 0:
            return True
        start = row * width
        for k in range(start, p):
            if self.bits[k] != self.bits[k - width]:
                # already strictly below the row above
                return True
        return self.bits[p - width] == 1

    def _set(self, p: int) -> None:
        self.bits[p] = 1
        self.oracle.push(self.cells[p])

    def _unset(self, p: int) -> None:
        self.bits[p] = 0
        self.oracle.pop(self.cells[p])

    def _fillable(self, p: int) -> bool:
        return self._allowed(p, 1) and not self.oracle.conflict(self.cells[p])

    def greedy(self) -> int:
        """Fill every position that stays admissible, in search order."""
        filled = []
        for p in range(self.size):
            if self._fillable(p):
                self._set(p)
                filled.append(p)
        for p in reversed(filled):
            self._unset(p)
        return len(filled)

    def _maximize(self, p: int, ones: int, best: int) -> int:
        self.nodes += 1
        if ones + self.bound[p] <= best:
            return best
        if p == self.size:
            return ones
        if self._fillable(p):
            self._set(p)
            best = self._maximize(p + 1, ones + 1, best)
            self._unset(p)
            if ones + self.bound[p] <= best:
                return best
        return self._maximize(p + 1, ones, best)

    def _split(self, depth: int) -> List[Tuple[int, ...]]:
        prefixes: List[Tuple[int, ...]] = []

        def walk(p: int, prefix: Tuple[int, ...]) -> None:
            if p == depth:
                prefixes.append(prefix)
                return
            if self._fillable(p):
                self._set(p)
                walk(p + 1, prefix + (1,))
                self._unset(p)
            walk(p + 1, prefix + (0,))

        walk(0, ())
        return prefixes

    def replay(self, prefix: Sequence[int]) -> int:
        for p, bit in enumerate(prefix):
            if bit:
                self._set(p)
        return sum(prefix)

    def maximize(self, threads: int = 1) -> int:
        """The optimum value; the search is left with nothing filled."""
        if self.size == 0:
            return 0
        bound = self.bound
        best = self.greedy()
        if best == bound[0]:
            return best
        if threads > 1 and self.size > 12:
            depth = min(self.size // 2, max(4, threads.bit_length() + 3))
            prefixes = self._split(depth)
            log.debug(
                "Splitting %s into %d subtrees on %d workers", self.shape, len(prefixes), threads
            )
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = pool.map(run_subtree, repeat(self), prefixes, repeat(best))
                return max(best, *results)
        return self._maximize(0, 0, best)

    def _canonical(self, p: int, ones: int, target: int) -> bool:
        self.nodes += 1
        if ones + self.bound[p] < target:
            return False
        if p == self.size:
            return True
        if self._canonical(p + 1, ones, target):
            return True
        if self._fillable(p):
            self._set(p)
            if self._canonical(p + 1, ones + 1, target):
                return True
            self._unset(p)
        return False

    def canonical(self, target: int) -> frozenset:
        """The lexicographically smallest filling with ``target`` ones, as cells."""
        if not self._canonical(0, 0, target):
            raise RuntimeError(f"no filling of {self.shape} reaches {target}")
        cells = frozenset(self.cells[p] for p in range(self.size) if self.bits[p])
        for p in range(self.size):
            if self.bits[p]:
                self._unset(p)
        return cells

    def solve(self, threads: int = 1) -> SearchResult:
        start = time.monotonic()
        value = self.maximize(threads)
        log.trace("Maximised %s to %d after %d nodes", self.shape, value, self.nodes)
        cells = self.canonical(value)
        log.trace("Canonical filling of %s found after %d nodes", self.shape, self.nodes)
        return SearchResult(
            value=value,
            cells=cells,
            nodes=self.nodes,
            elapsed_ms=int((time.monotonic() - start) * 1000),
        )


def run_subtree(search: BoxSearch, prefix: Sequence[int], best: int) -> int:
    """Worker entry point: maximise below a fixed assignment of the first positions."""
    ones = search.replay(prefix)
    return search._maximize(len(prefix), ones, best)