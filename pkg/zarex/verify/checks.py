# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
The registered inequality checks.

Exact grid values (:func:`px_lower_search` in exact mode) stand in for ``px`` on every side,
and every report carries the resolution it was computed at.
"""
from __future__ import annotations

from typing import Dict, List, Optional
from fractions import Fraction
from functools import lru_cache
from itertools import product
import json
import logging
import pathlib
import random

from ..constructions import block_diagonal, diagonal_segment_box, lshape, region_from_matrix
from ..errors import AlignmentError, CertificateError, PatternError
from ..extremal import (
    check_superadditive,
    check_tardos_blank,
    deletion_lower_bound,
    ex_exact,
    ex_lower_random_deletion,
)
from ..grid import px_lower_search, region_contains
from ..types import (
    CheckReport,
    ExtremalRecord,
    FinitePattern,
    GridRegion,
    HSegment,
    Pattern,
    RatLike,
    Relation,
    SegmentPattern,
    StackPattern,
    append_point,
    append_segment,
    as_rat,
    ceil_div,
    max_gap,
    min_gap,
    pattern_to_matrix,
    project,
)
from ..util.logging import TraceLogger
from .analytic import (
    analytic_upper_stack,
    estimate_simplex_volume,
    simplex_lower_bound,
    simplex_volume,
)
from .oracle import embeds_points, embeds_segments, zarankiewicz
from .registry import check, named_matrix, named_pattern, report_params

log: TraceLogger = logging.getLogger("zarex.verify")

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
ZARANKIEWICZ_FIXTURE = FIXTURES / "zarankiewicz.json"

J22 = "J22"


def fixture_values(path: pathlib.Path = ZARANKIEWICZ_FIXTURE) -> Dict[int, int]:
    return {int(n): value for n, value in json.loads(path.read_text())["values"].items()}


def fixture_document(max_n: int = 6) -> str:
    """The fixture file contents, computed from the independent oracle."""
    data = {
        "note": "ex(n, J_{2,2}) from the row-pairs oracle",
        "pattern": "J_{2,2}",
        "schema": "zarex/1",
        "values": {str(n): zarankiewicz(n) for n in range(1, max_n + 1)},
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def grid_value(pattern: Pattern, n: RatLike, r: int) -> Fraction:
    """The exact grid value of ``px(n, P)`` at resolution ``r``, as a measure."""
    return px_lower_search(n, r, pattern).measure


@lru_cache(maxsize=None)
def extremal_j22(n: int) -> ExtremalRecord:
    return ex_exact(n, named_matrix(J22), symmetry_breaking=True)


def _finite(name: str) -> FinitePattern:
    pattern = named_pattern(name)
    if not isinstance(pattern, FinitePattern):
        raise PatternError(f"{name!r} is not a finite pattern")
    return pattern


@check(cases=[{"n": n} for n in range(1, 7)])
def zarankiewicz_fixture(n: int) -> CheckReport:
    """ex(n, J_{2,2}) from the solver equals the brute-force oracle."""
    return CheckReport(
        check_id="zarankiewicz_fixture",
        params=report_params(n=n),
        lhs=Fraction(extremal_j22(n).value),
        rhs=Fraction(zarankiewicz(n)),
        relation=Relation.EQ,
    )


@check(cases=[{"m": m, "n": n} for m in range(1, 4) for n in range(m, 7 - m)])
def superadditive(m: int, n: int) -> List[CheckReport]:
    """ex(m + n) >= ex(m) + ex(n) on the committed J_{2,2} fixture table."""
    table = fixture_values()
    return check_superadditive(named_matrix(J22), [(m, n)], ex=lambda k, pattern, d: table[k])


@check(cases=[{"matrix": J22, "k": 1, "n": 4}])
def tardos_blank(matrix: str, k: int, n: int) -> CheckReport:
    """ex(n, S(M, k)) <= (k+1)^2 ex(ceil(n/(k+1)), M) with exact values on both sides."""
    report = check_tardos_blank(named_matrix(matrix), k, n)
    return CheckReport(
        check_id=report.check_id,
        params=report_params(matrix=matrix, k=k, n=n),
        lhs=report.lhs,
        rhs=report.rhs,
        relation=report.relation,
    )


@check(cases=[{"n": 64, "r": 2, "seeds": 100, "slack": Fraction(9, 10), "seed": 0}])
def random_deletion(n: int, r: int, seeds: int, slack: Fraction, seed: int) -> CheckReport:
    """Mean ones after random deletion reach a fraction of n^(2-2/(r+1)) / 2."""
    total = 0
    for offset in range(seeds):
        # every certificate is re-checked for J_{r,r} inside the solver
        total += ex_lower_random_deletion(n, r, seed=seed + offset).value
    mean = Fraction(total, seeds)
    return CheckReport(
        check_id="random_deletion",
        params=report_params(n=n, r=r, seeds=seeds, slack=as_rat(slack), seed=seed),
        lhs=mean,
        rhs=as_rat(slack) * deletion_lower_bound(n, r),
        relation=Relation.GE,
    )


@check(cases=[{"c": 1, "n": 4, "r": 4}, {"c": 1, "n": 2, "r": 2}])
def horizseg(c: RatLike, n: RatLike, r: int) -> CheckReport:
    """The grid value for a horizontal segment of length c is exactly c·n when g = c."""
    c, n = as_rat(c), as_rat(n)
    return CheckReport(
        check_id="horizseg",
        params=report_params(c=c, n=n, r=r),
        lhs=grid_value(HSegment(c=c), n, r),
        rhs=c * n,
        relation=Relation.EQ,
    )


@check(
    cases=[
        {"a": 1, "b": 1, "n": 2, "r": 2},
        {"a": Fraction(1, 2), "b": Fraction(3, 2), "n": 2, "r": 4},
    ],
)
def diagseg_construction(a: RatLike, b: RatLike, n: RatLike, r: int) -> CheckReport:
    """The L-shape next to a diagonal segment has measure (a+b)n - ab."""
    a, b, n = as_rat(a), as_rat(b), as_rat(n)
    return CheckReport(
        check_id="diagseg_construction",
        params=report_params(a=a, b=b, n=n, r=r),
        lhs=lshape(a, b, n, r).measure,
        rhs=diagonal_segment_box(a, b).lshape_measure(n),
        relation=Relation.EQ,
        note="avoidance of the diagonal segment is not decided",
    )


@check(cases=[{"n": n} for n in range(2, 7)])
def lowerth_roundtrip(n: int) -> CheckReport:
    """An extremal J_{2,2}-free matrix lifts to a unit-grid-free region of measure ex(n)."""
    region = region_from_matrix(extremal_j22(n).certificate, 1, n)
    if region_contains(region, named_pattern("unit_grid")):
        raise CertificateError(f"the lifted extremal matrix for n={n} contains the unit grid")
    return CheckReport(
        check_id="lowerth_roundtrip",
        params=report_params(n=n),
        lhs=region.measure,
        rhs=Fraction(fixture_values()[n]),
        relation=Relation.EQ,
    )


@check(
    cases=[
        {"pattern": "unit_grid", "n": 4, "r": 4},
        {"pattern": "point", "n": 2, "r": 2},
        {"pattern": "pair", "n": 4, "r": 4},
    ],
)
def main_equivalence(pattern: str, n: RatLike, r: int) -> CheckReport:
    """
    Matrix construction <= grid value <= the blank-row envelope
    g²·(k+1)²·ex(ceil(r/(k+1)), M_P) with k = ceil(largest gap / g).
    """
    finite = _finite(pattern)
    n = as_rat(n)
    g = n / r
    smallest, largest = min_gap(finite), max_gap(finite)
    if smallest is not None and g > smallest:
        raise AlignmentError(f"cell side {g} is wider than the smallest gap {smallest}")
    matrix = pattern_to_matrix(finite)
    certificate = ex_exact(r, matrix).certificate
    lower = region_from_matrix(certificate, g, n).measure
    k = 0 if largest is None else ceil_div(largest, g)
    upper = g**2 * (k + 1) ** 2 * ex_exact(-(-r // (k + 1)), matrix).value
    return CheckReport(
        check_id="main_equivalence",
        params=report_params(pattern=pattern, n=n, r=r),
        lhs=lower,
        middle=grid_value(finite, n, r),
        rhs=upper,
        relation=Relation.LE,
        note=f"k={k}",
    )


def _added(kind: str, pattern: str, c: RatLike, n: RatLike, r: int) -> CheckReport:
    base = _finite(pattern)
    c, n = as_rat(c), as_rat(n)
    grown = append_segment(base, c) if kind == "addedseg" else append_point(base, c)
    return CheckReport(
        check_id=kind,
        params=report_params(pattern=pattern, c=c, n=n, r=r),
        lhs=grid_value(grown, n, r),
        rhs=grid_value(base, n, r) + c * n,
        relation=Relation.LE,
    )


@check(
    cases=[
        {"pattern": "point", "c": 1, "n": 2, "r": 2},
        {"pattern": "point", "c": 0, "n": 2, "r": 2},
        {"pattern": "pair", "c": 1, "n": 3, "r": 3},
        {"pattern": "diag_pair", "c": Fraction(1, 2), "n": 2, "r": 2},
    ],
)
def addedseg(pattern: str, c: RatLike, n: RatLike, r: int) -> CheckReport:
    """Adding a segment of length c at the anchor raises the grid value by at most c·n."""
    return _added("addedseg", pattern, c, n, r)


@check(
    cases=[
        {"pattern": "point", "c": 1, "n": 2, "r": 2},
        {"pattern": "pair", "c": 1, "n": 3, "r": 3},
    ],
)
def addedpt(pattern: str, c: RatLike, n: RatLike, r: int) -> CheckReport:
    """Adding a point at distance c from the anchor raises the grid value by at most c·n."""
    return _added("addedpt", pattern, c, n, r)


@check(
    cases=[
        {"pattern": "unit_grid", "q": 2, "n": 4, "r": 4},
        {"pattern": "pair", "q": 2, "n": 4, "r": 4},
        {"pattern": "point", "q": 2, "n": 2, "r": 2},
    ],
)
def ps_blank(pattern: str, q: RatLike, n: RatLike, r: int) -> CheckReport:
    """v(n, qP) <= (K+1)²·v(m, P) with K = ceil(q·d/c) and m = ceil(ceil(n/c)/(K+1))·c."""
    finite = _finite(pattern)
    q, n = as_rat(q), as_rat(n)
    g = n / r
    dilated = finite.dilate(q)
    lhs = grid_value(dilated, n, r)
    c, d = min_gap(finite), max_gap(finite)
    if c is None:
        # a single point is avoided by nothing
        return CheckReport(
            check_id="ps_blank",
            params=report_params(pattern=pattern, q=q, n=n, r=r),
            lhs=lhs,
            rhs=lhs,
            relation=Relation.LE,
        )
    blank = ceil_div(q * d, c)
    side = -(-ceil_div(n, c) // (blank + 1)) * c
    cells = side / g
    if cells.denominator != 1:
        raise AlignmentError(f"the reduced side {side} is not a whole number of {g}-cells")
    return CheckReport(
        check_id="ps_blank",
        params=report_params(pattern=pattern, q=q, n=n, r=r),
        lhs=lhs,
        rhs=(blank + 1) ** 2 * grid_value(finite, side, int(cells)),
        relation=Relation.LE,
        note=f"K={blank}, m={side}",
    )


@check(cases=[{"s": 1, "c": 1, "n": n, "r": n} for n in (2, 3, 4)])
def kst_sandwich(s: RatLike, c: RatLike, n: RatLike, r: int) -> CheckReport:
    """Lifted J_{2,2}-free matrix <= grid value for two stacked segments <= closed form."""
    s, c, n = as_rat(s), as_rat(c), as_rat(n)
    g = n / r
    if g > min(s, c):
        raise AlignmentError(f"cell side {g} must not exceed s={s} and c={c}")
    stack = StackPattern(s=s, t=2, c=c)
    lower = region_from_matrix(ex_exact(r, named_matrix(J22)).certificate, g, n)
    return CheckReport(
        check_id="kst_sandwich",
        params=report_params(s=s, c=c, n=n, r=r),
        lhs=lower.measure,
        middle=grid_value(stack, n, r),
        rhs=analytic_upper_stack(s, 2, c, n),
        relation=Relation.LE,
    )


@check(cases=[{"s": 1, "t": 3, "c": 1, "n": 3, "r": 3}])
def kst_general_t(s: RatLike, t: int, c: RatLike, n: RatLike, r: int) -> CheckReport:
    """The grid value for t stacked segments stays below the general closed form."""
    s, c, n = as_rat(s), as_rat(c), as_rat(n)
    return CheckReport(
        check_id="kst_general_t",
        params=report_params(s=s, t=t, c=c, n=n, r=r),
        lhs=grid_value(StackPattern(s=s, t=t, c=c), n, r),
        rhs=analytic_upper_stack(s, t, c, n),
        relation=Relation.LE,
    )


@check(
    cases=[
        {"pattern": "lifted_point", "n": 2, "r": 2},
        {"pattern": "lifted_pair", "n": 2, "r": 2},
        {"pattern": "lifted_pair", "n": 3, "r": 3},
        {"pattern": "lifted_unit_grid", "n": 2, "r": 2},
        {"pattern": "lifted_unit_grid", "n": 3, "r": 3},
    ],
)
def projection(pattern: str, n: RatLike, r: int) -> CheckReport:
    """A pattern with a constant last coordinate: the (d+1)-grid value is n times the d-one."""
    lifted = _finite(pattern)
    if len(lifted.axis_values(lifted.dim - 1)) != 1:
        raise PatternError(f"{pattern!r} does not have a constant last coordinate")
    n = as_rat(n)
    return CheckReport(
        check_id="projection",
        params=report_params(pattern=pattern, n=n, r=r),
        lhs=grid_value(lifted, n, r),
        rhs=n * grid_value(project(lifted), n, r),
        relation=Relation.EQ,
    )


@check(
    "simplex_volume",
    cases=[
        {"t": 2, "c": 0, "n": 4, "samples": 1_000_000, "seed": 0},
        {"t": 2, "c": 1, "n": 4, "samples": 1_000_000, "seed": 0},
        {"t": 3, "c": 1, "n": 2, "samples": 1_000_000, "seed": 0},
    ],
)
def simplex_volume_check(t: int, c: RatLike, n: RatLike, samples: int, seed: int) -> CheckReport:
    """A seeded Monte-Carlo volume lies in [(n/t - c)^t, n^t] up to three standard errors."""
    c, n = as_rat(c), as_rat(n)
    found = estimate_simplex_volume(t, c, n, samples, seed)
    slack = 3 * found.sigma
    return CheckReport(
        check_id="simplex_volume",
        params=report_params(t=t, c=c, n=n, samples=samples, seed=seed),
        lhs=simplex_lower_bound(t, c, n) - slack,
        middle=found.estimate,
        rhs=n**t + slack,
        relation=Relation.LE,
        note=f"sigma={float(found.sigma):.6f}, exact volume={simplex_volume(t, c, n)}",
    )


@check(
    cases=[
        {"pattern": "pair", "m": 1, "n": 1, "g": 1},
        {"pattern": "pair", "m": 1, "n": 2, "g": 1},
        {"pattern": "unit_grid", "m": 2, "n": 2, "g": 1},
    ],
)
def px_superadditive(pattern: str, m: RatLike, n: RatLike, g: RatLike) -> CheckReport:
    """v(m + n) >= v(m) + v(n) at a fixed cell side, with the block-diagonal union reported."""
    finite = _finite(pattern)
    m, n, g = as_rat(m), as_rat(n), as_rat(g)
    sizes = [m / g, n / g]
    if any(size.denominator != 1 for size in sizes):
        raise AlignmentError(f"sides {m} and {n} are not whole numbers of {g}-cells")
    left = px_lower_search(m, int(sizes[0]), finite)
    right = px_lower_search(n, int(sizes[1]), finite)
    union = block_diagonal(left.region, right.region)
    free = "free" if not region_contains(union, finite) else "not free"
    return CheckReport(
        check_id="px_superadditive",
        params=report_params(pattern=pattern, m=m, n=n, g=g),
        lhs=grid_value(finite, m + n, int(sizes[0] + sizes[1])),
        rhs=left.measure + right.measure,
        relation=Relation.GE,
        note=f"block-diagonal union is {free}",
    )


@check(cases=[{"pattern": "rising_segments", "g": 1, "start": 1, "steps": 3}])
def segments_trend(pattern: str, g: RatLike, start: RatLike, steps: int) -> List[CheckReport]:
    """Grid values of a segment pattern do not decrease as the square grows by one cell."""
    segments = named_pattern(pattern)
    if not isinstance(segments, SegmentPattern):
        raise PatternError(f"{pattern!r} is not a segment pattern")
    g, start = as_rat(g), as_rat(start)
    cells = start / g
    if cells.denominator != 1:
        raise AlignmentError(f"the starting side {start} is not a whole number of {g}-cells")
    sides = [start + i * g for i in range(steps + 1)]
    values = [grid_value(segments, side, int(cells) + i) for i, side in enumerate(sides)]
    return [
        CheckReport(
            check_id="segments_trend",
            params=report_params(pattern=pattern, g=g, n=small),
            lhs=big_value,
            rhs=small_value,
            relation=Relation.GE,
            note=f"v/n {float(small_value / small):.6f} -> {float(big_value / big):.6f}",
        )
        for small, big, small_value, big_value in zip(sides, sides[1:], values, values[1:])
    ]


ORACLE_FINITE = [
    "point",
    "pair",
    "half_pair",
    "diag_pair",
    "anti_pair",
    "corner",
    "skew_triple",
    "unit_grid",
    "half_grid",
]
ORACLE_SEGMENTS = ["rising_segments", "falling_segments", "close_segments", "long_segment"]


def _oracle_regions(r: int, samples: Optional[int], seed: int) -> List[GridRegion]:
    cells = list(product(range(1, r + 1), repeat=2))
    if samples is None:
        masks = range(1 << len(cells))
    else:
        rng = random.Random(f"{seed}/decider_oracle/{r}")
        masks = [rng.getrandbits(len(cells)) for _ in range(samples)]
    return [
        GridRegion(d=2, n=r, r=r, cells=[cell for k, cell in enumerate(cells) if mask >> k & 1])
        for mask in masks
    ]


@check(
    cases=[
        {"r": 1, "samples": 0, "seed": 0},
        {"r": 2, "samples": 0, "seed": 0},
        {"r": 3, "samples": 0, "seed": 0},
    ],
)
def decider_oracle(r: int, samples: int, seed: int) -> CheckReport:
    """
    The deciders agree with brute-force embedding on unit-cell regions: every region when
    ``samples`` is 0, otherwise that many seeded random ones.
    """
    regions = _oracle_regions(r, samples or None, seed)
    agree = total = 0
    for region in regions:
        for name in ORACLE_FINITE:
            finite = _finite(name)
            expected = embeds_points(region, sorted(finite.points))
            agree += region_contains(region, finite) == expected
            total += 1
        for name in ORACLE_SEGMENTS:
            segments = named_pattern(name)
            agree += region_contains(region, segments) == embeds_segments(region, segments)
            total += 1
    if agree != total:
        log.warning("Deciders disagree with the oracle on %d of %d cases", total - agree, total)
    return CheckReport(
        check_id="decider_oracle",
        params=report_params(r=r, samples=samples, seed=seed),
        lhs=Fraction(agree),
        rhs=Fraction(total),
        relation=Relation.EQ,
    )
