# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""Closed-form bounds, rounded so that comparisons against exact values stay one-sided."""
from __future__ import annotations

from typing import NamedTuple
from fractions import Fraction
from math import factorial
import logging

import numpy as np

from ..errors import PatternError
from ..types import RatLike, as_rat, root_upper
from ..util.logging import TraceLogger

log: TraceLogger = logging.getLogger("zarex.verify")

CHUNK = 1 << 16


def analytic_upper_stack(s: RatLike, t: int, c: RatLike, n: RatLike, bits: int = 30) -> Fraction:
    """
    An upper bound on the measure of any open subset of ``[0, n]²`` avoiding ``t`` stacked
    segments of length ``s`` spaced ``c`` apart.

    ``t = 2`` uses ``c·n + (n − c)·√(s·n)``, larger ``t`` uses
    ``c·t·n + t·(s·n^(2t−1))^(1/t)``. Radicals are rounded up to a multiple of ``2^-bits``.

    Examples:
        >>> analytic_upper_stack(1, 2, 1, 4)
        Fraction(10, 1)
    """
    s, c, n = as_rat(s), as_rat(c), as_rat(n)
    if s <= 0 or c <= 0 or n <= 0 or t < 2:
        raise PatternError(f"need s, c, n > 0 and t >= 2, got s={s}, t={t}, c={c}, n={n}")
    if t == 2:
        return c * n + max(n - c, Fraction(0)) * root_upper(s * n, 2, bits)
    return c * t * n + t * root_upper(s * n ** (2 * t - 1), t, bits)


def simplex_volume(t: int, c: RatLike, n: RatLike) -> Fraction:
    """
    The volume of ``{y : 0 < y_t, y_(i+1) + c < y_i < n − (i−1)·c}``, which is
    ``(n − (t−1)·c)^t / t!`` and zero once the chain no longer fits.
    """
    c, n = as_rat(c), as_rat(n)
    room = n - (t - 1) * c
    if room <= 0:
        return Fraction(0)
    return room**t / factorial(t)


def simplex_lower_bound(t: int, c: RatLike, n: RatLike) -> Fraction:
    c, n = as_rat(c), as_rat(n)
    return max(n / t - c, Fraction(0)) ** t


class VolumeEstimate(NamedTuple):
    estimate: Fraction
    sigma: Fraction
    hits: int
    samples: int


def estimate_simplex_volume(
    t: int, c: RatLike, n: RatLike, samples: int = 1_000_000, seed: int = 0
) -> VolumeEstimate:
    """
    Monte-Carlo estimate of :func:`simplex_volume` from uniform samples of ``[0, n]^t``.

    The estimate is ``n^t·hits/samples`` and ``sigma`` its standard error rounded up, both
    exact rationals; only the sampling runs in floating point.
    """
    if not 1 <= t <= 4:
        raise PatternError(f"volume estimates support 1 <= t <= 4, got {t}")
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    c, n = as_rat(c), as_rat(n)
    rng = np.random.default_rng(seed)
    upper = np.array([float(n - i * c) for i in range(t)])
    hits = 0
    remaining = samples
    while remaining:
        size = min(CHUNK, remaining)
        points = rng.uniform(0.0, float(n), size=(size, t))
        inside = (points > 0).all(axis=1) & (points < upper).all(axis=1)
        if t > 1:
            inside &= (points[:, 1:] + float(c) < points[:, :-1]).all(axis=1)
        hits += int(np.count_nonzero(inside))
        remaining -= size
    cube = n**t
    share = Fraction(hits, samples)
    sigma = cube * root_upper(share * (1 - share) / samples, 2)
    log.debug("Simplex t=%d c=%s n=%s: %d of %d samples inside", t, c, n, hits, samples)
    return VolumeEstimate(cube * share, sigma, hits, samples)
