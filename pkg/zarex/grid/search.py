# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Dict, List, Optional, Set, Union
from itertools import product
import logging
import random
import time

from simanneal import Annealer

from ..errors import CertificateError, GuardExceededError
from ..search import BoxSearch, CellMap, SearchOracle
from ..types import (
    BoundKind,
    ExtremalRecord,
    GridRegion,
    Index,
    Pattern,
    RatLike,
    RecordKind,
    SearchMethod,
    as_rat,
    pattern_id,
)
from ..util.logging import TraceLogger
from .deciders import region_contains

log: TraceLogger = logging.getLogger("zarex.grid")

DEFAULT_EXACT_MAX_CELLS: Dict[int, int] = {2: 25, 3: 27}


class RegionOracle(SearchOracle):
    """Avoidance of a pattern by a region of the ``r``-grid that is being filled."""

    def __init__(self, pattern: Pattern, d: int, n: RatLike, r: int) -> None:
        self.pattern = pattern
        self.d = d
        self.n = as_rat(n)
        self.r = r
        self.cells: Set[Index] = set()

    def fresh(self) -> RegionOracle:
        return RegionOracle(self.pattern, self.d, self.n, self.r)

    def region(self, *extra: Index) -> GridRegion:
        return GridRegion(d=self.d, n=self.n, r=self.r, cells=self.cells.union(extra))

    def conflict(self, cell: Index) -> bool:
        # the filled cells avoid the pattern, so any copy has to use the new cell
        return region_contains(self.region(cell), self.pattern)

    def push(self, cell: Index) -> None:
        self.cells.add(cell)

    def pop(self, cell: Index) -> None:
        self.cells.discard(cell)


def search_cell_map(d: int, r: int) -> CellMap:
    """
    Search order for regions: in 2-D the top cell-row first and left to right, like the matrix of
    the region; in higher dimensions the last coordinate is the slowest.
    """
    if d == 2:
        return CellMap(order=(1, 0), flip=(True, False), size=r)
    return CellMap(order=(d - 1,) + tuple(range(d - 1)), flip=(False,) * d, size=r)


class RegionAnnealer(Annealer):
    """Toggle one cell per move; a move that would complete a copy is rejected in place."""

    copy_strategy = "slice"

    def __init__(
        self, oracle: RegionOracle, cells: List[Index], state: List[int], rng: random.Random
    ) -> None:
        self.oracle = oracle
        self.all_cells = cells
        self.rng = rng
        super().__init__(state)

    def move(self) -> None:
        i = self.rng.randrange(len(self.state))
        if self.state[i]:
            self.state[i] = 0
            return
        oracle = self.oracle.fresh()
        oracle.cells = {cell for cell, bit in zip(self.all_cells, self.state) if bit}
        if not oracle.conflict(self.all_cells[i]):
            self.state[i] = 1

    def energy(self) -> float:
        return -sum(self.state)


def certify_region(region: GridRegion, pattern: Pattern) -> GridRegion:
    if region_contains(region, pattern):
        raise CertificateError(f"certificate region with {len(region.cells)} cells contains P")
    return region


def _greedy(oracle: RegionOracle, cells: List[Index]) -> Set[Index]:
    for cell in cells:
        if not oracle.conflict(cell):
            oracle.push(cell)
    return set(oracle.cells)


def px_lower_search(
    n: RatLike,
    r: int,
    pattern: Pattern,
    method: Union[SearchMethod, str] = SearchMethod.EXACT,
    seed: int = 0,
    *,
    threads: int = 1,
    max_cells: Optional[Dict[int, int]] = None,
    steps: int = 20000,
    t_max: float = 2.0,
    t_min: float = 0.05,
) -> ExtremalRecord:
    """
    A lower bound on ``px(n, P)``: the largest ``P``-free union of cells of the ``r``-grid that
    the chosen method finds.

    ``exact`` is a branch and bound whose certificate is the smallest optimal cell set in search
    order. ``greedy`` adds cells in a seeded random order. ``anneal`` starts from the greedy
    region and toggles cells with :class:`simanneal.Annealer`; all of its randomness comes from
    ``seed`` as well.

    Raises:
        GuardExceededError: ``r^d`` is above the exact-mode limit for ``d``.
    """
    method = SearchMethod(method)
    n = as_rat(n)
    d = pattern.dim
    if r < 1:
        raise ValueError(f"resolution must be positive, got {r}")
    start = time.monotonic()
    cell_map = search_cell_map(d, r)
    oracle = RegionOracle(pattern, d, n, r)
    if method == SearchMethod.EXACT:
        limit = (max_cells or DEFAULT_EXACT_MAX_CELLS).get(d, 0)
        if r**d > limit:
            raise GuardExceededError(f"px_lower_search(r={r}, d={d})", r**d, limit)
        result = BoxSearch((r,) * d, oracle, cell_map).solve(threads=threads)
        cells = set(result.cells)
        log.debug("Exact px grid value %d at r=%d after %d nodes", result.value, r, result.nodes)
    else:
        rng = random.Random(f"{seed}/{method.value}")
        order = [cell_map(index) for index in product(range(1, r + 1), repeat=d)]
        rng.shuffle(order)
        cells = _greedy(oracle, order)
        if method == SearchMethod.ANNEAL:
            cells = _anneal(oracle.fresh(), order, cells, rng, steps, t_max, t_min)
        log.debug("%s px grid value %d at r=%d", method.value.capitalize(), len(cells), r)
    region = certify_region(GridRegion(d=d, n=n, r=r, cells=cells), pattern)
    return ExtremalRecord(
        kind=RecordKind.PX,
        pattern_id=pattern_id(pattern),
        n=n,
        d=d,
        value=len(region.cells),
        bound=BoundKind.LOWER,
        method=method.value,
        region=region,
        r=r,
        measure=region.measure,
        seed=None if method == SearchMethod.EXACT else seed,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


def _anneal(
    oracle: RegionOracle,
    order: List[Index],
    cells: Set[Index],
    rng: random.Random,
    steps: int,
    t_max: float,
    t_min: float,
) -> Set[Index]:
    annealer = RegionAnnealer(oracle, order, [int(cell in cells) for cell in order], rng)
    annealer.steps = steps
    annealer.Tmax = t_max
    annealer.Tmin = t_min
    annealer.updates = 0
    # Annealer draws its acceptance tests from the module-level generator
    saved = random.getstate()
    random.seed(rng.getrandbits(64))
    try:
        state, _ = annealer.anneal()
    finally:
        random.setstate(saved)
    best = {cell for cell, bit in zip(order, state) if bit}
    return best if len(best) >= len(cells) else cells


def refinement_sequence(
    n: RatLike,
    r: int,
    pattern: Pattern,
    levels: int = 3,
    method: Union[SearchMethod, str] = SearchMethod.EXACT,
    **options,
) -> List[ExtremalRecord]:
    """Grid values at resolutions ``r, 2r, 4r, …``; exact runs stop at the size guard."""
    records = []
    for level in range(levels):
        try:
            records.append(px_lower_search(n, r << level, pattern, method, **options))
        except GuardExceededError:
            if not records:
                raise
            log.debug("Refinement of %s stopped at r=%d", pattern.kind, r << level)
            break
    return records
