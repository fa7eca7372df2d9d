# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from functools import singledispatch

from ..errors import PatternError
from ..types import (
    AugmentedPattern,
    FinitePattern,
    GridRegion,
    HSegment,
    Pattern,
    SegmentPattern,
    StackPattern,
)
from .finite import region_contains_augmented, region_contains_finite
from .segments import region_contains_hsegment, region_contains_segments, region_contains_stack


def region_contains(region: GridRegion, pattern: Pattern) -> bool:
    """Check whether ``region`` contains ``pattern``, whatever kind of pattern it is."""
    return _contains(pattern, region)


@singledispatch
def _contains(pattern: Pattern, region: GridRegion) -> bool:
    raise PatternError(f"no containment decider for {type(pattern).__name__}")


@_contains.register(FinitePattern)
def _(pattern: FinitePattern, region: GridRegion) -> bool:
    return region_contains_finite(region, pattern)


@_contains.register(AugmentedPattern)
def _(pattern: AugmentedPattern, region: GridRegion) -> bool:
    return region_contains_augmented(region, pattern)


@_contains.register(SegmentPattern)
def _(pattern: SegmentPattern, region: GridRegion) -> bool:
    return region_contains_segments(region, pattern)


@_contains.register(StackPattern)
def _(pattern: StackPattern, region: GridRegion) -> bool:
    return region_contains_stack(region, pattern)


@_contains.register(HSegment)
def _(pattern: HSegment, region: GridRegion) -> bool:
    return region_contains_hsegment(region, pattern.c)
