# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Callable, Dict, Iterable, List, Optional, Tuple
from fractions import Fraction

from ..matrix import blowup
from ..types import BitMatrix, CheckReport, Relation, pattern_id
from .solver import ex_exact

ExValue = Callable[[int, BitMatrix, int], int]


class ExTable:
    """Memoised exact values ``ex(n, M, d)``; solver options are passed through."""

    def __init__(self, **solver_options) -> None:
        self.solver_options = solver_options
        self.values: Dict[Tuple[str, int, int], int] = {}

    def __call__(self, n: int, pattern: BitMatrix, d: int = 2) -> int:
        if n <= 0:
            return 0
        key = (pattern_id(pattern), n, d)
        if key not in self.values:
            self.values[key] = ex_exact(n, pattern, d, **self.solver_options).value
        return self.values[key]


def check_superadditive(
    pattern: BitMatrix,
    pairs: Iterable[Tuple[int, int]],
    d: int = 2,
    ex: Optional[ExValue] = None,
) -> List[CheckReport]:
    """``ex(m + n) >= ex(m) + ex(n)``, one report per pair with the margin in the note."""
    ex = ex or ExTable()
    reports = []
    for m, n in pairs:
        lhs = Fraction(ex(m + n, pattern, d))
        rhs = Fraction(ex(m, pattern, d) + ex(n, pattern, d))
        reports.append(
            CheckReport(
                check_id="superadditive",
                params={"pattern": pattern_id(pattern), "m": m, "n": n, "d": d},
                lhs=lhs,
                rhs=rhs,
                relation=Relation.GE,
                note=f"margin {lhs - rhs}",
            )
        )
    return reports


def check_tardos_blank(
    pattern: BitMatrix, k: int, n: int, d: int = 2, ex: Optional[ExValue] = None
) -> CheckReport:
    """``ex(n, S(M, k)) <= (k+1)^d · ex(ceil(n / (k+1)), M)``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    ex = ex or ExTable()
    spread = blowup(pattern, k)
    lhs = ex(n, spread, d)
    rhs = (k + 1) ** d * ex(-(-n // (k + 1)), pattern, d)
    return CheckReport(
        check_id="tardos_blank",
        params={"pattern": pattern_id(pattern), "k": k, "n": n, "d": d},
        lhs=Fraction(lhs),
        rhs=Fraction(rhs),
        relation=Relation.LE,
    )
