# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Placing a chain of values into open grid windows.

A chain is a sequence of classes with required gaps ``x_{i+1} - x_i >= gap_i``; class ``i`` must
land strictly inside the window ``(g·(a_i - 1), g·a_i)`` of its cell ``a_i``. For fixed cells the
smallest placement is ``L_1 = g·(a_1 - 1) + ε``, ``L_i = max(g·(a_i - 1) + ε, L_{i-1} + gap)``,
and the chain fits iff ``L_i < g·a_i`` for every ``i``. Smaller infima never hurt later classes,
so along the last axis the lowest admissible cell is always the right choice.
"""
from __future__ import annotations

from typing import Iterator, List, Optional, Sequence, Tuple
from fractions import Fraction
from math import floor

from ..types import EpsRat

Chain = Tuple[Tuple[int, ...], Tuple[EpsRat, ...]]


def lowest_cell(lower: Optional[EpsRat], g: Fraction) -> int:
    """The smallest 1-based cell whose window has room above ``lower``."""
    if lower is None:
        return 1
    ratio = lower.base / g
    if lower.eps >= 0:
        return max(1, floor(ratio) + 1)
    return max(1, -(-ratio.numerator // ratio.denominator))


def enter(cell: int, lower: Optional[EpsRat], g: Fraction) -> EpsRat:
    """The infimal position inside ``cell`` that respects ``lower``."""
    start = EpsRat(g * (cell - 1), 1)
    return start if lower is None or lower < start else lower


def axis_chains(gaps: Sequence[Fraction], g: Fraction, r: int) -> List[Chain]:
    """Every feasible cell assignment of a chain with ``len(gaps) + 1`` classes."""
    found: List[Chain] = []

    def extend(cells: Tuple[int, ...], coords: Tuple[EpsRat, ...]) -> None:
        k = len(cells)
        if k == len(gaps) + 1:
            found.append((cells, coords))
            return
        lower = coords[-1] + gaps[k - 1] if k else None
        for cell in range(lowest_cell(lower, g), r + 1):
            extend(cells + (cell,), coords + (enter(cell, lower, g),))

    extend((), ())
    return found


def _pick(mask: int, lower: Optional[EpsRat], g: Fraction) -> Optional[int]:
    start = lowest_cell(lower, g)
    rest = mask >> (start - 1)
    if not rest:
        return None
    return start + (rest & -rest).bit_length() - 1


def fit_chain(masks: Sequence[int], gaps: Sequence[Fraction], g: Fraction) -> Optional[Chain]:
    """Greedy lowest placement of a chain whose class ``i`` may use the cells in ``masks[i]``."""
    cells: List[int] = []
    coords: List[EpsRat] = []
    for k, mask in enumerate(masks):
        lower = coords[-1] + gaps[k - 1] if k else None
        cell = _pick(mask, lower, g)
        if cell is None:
            return None
        cells.append(cell)
        coords.append(enter(cell, lower, g))
    return tuple(cells), tuple(coords)


def branch_chains(
    masks: Sequence[int], gaps: Sequence[Fraction], g: Fraction, at: int
) -> Iterator[Chain]:
    """
    Like :func:`fit_chain`, but try every admissible cell for class ``at``. Greedy choices are
    still optimal for the other classes.
    """
    head = fit_chain(masks[:at], gaps[: at - 1], g) if at else ((), ())
    if head is None:
        return
    cells, coords = head
    lower = coords[-1] + gaps[at - 1] if at else None
    mask = masks[at] & -(1 << (lowest_cell(lower, g) - 1))
    while mask:
        low = mask & -mask
        mask ^= low
        cell = low.bit_length()
        here = enter(cell, lower, g)
        tail = fit_chain_from(masks, gaps, g, at + 1, here)
        if tail is not None:
            yield cells + (cell,) + tail[0], coords + (here,) + tail[1]


def fit_chain_from(
    masks: Sequence[int], gaps: Sequence[Fraction], g: Fraction, k: int, previous: EpsRat
) -> Optional[Chain]:
    """Greedy placement of classes ``k..`` after class ``k - 1`` was placed at ``previous``."""
    cells: List[int] = []
    coords: List[EpsRat] = []
    for i in range(k, len(masks)):
        lower = (coords[-1] if coords else previous) + gaps[i - 1]
        cell = _pick(masks[i], lower, g)
        if cell is None:
            return None
        cells.append(cell)
        coords.append(enter(cell, lower, g))
    return tuple(cells), tuple(coords)
