# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Callable, ClassVar, Dict, FrozenSet, Iterable, List, Optional, Tuple, Type
from typing import TypeVar, Union
from fractions import Fraction
from itertools import pairwise
import hashlib

from attr import dataclass

from ..errors import DimensionMismatchError, PatternError
from .matrix import BitMatrix
from .primitive import JSON, SCHEMA, PatternID
from .rational import RatLike, as_rat
from .util import SerializableAttrs, SerializerError, field

Point = Tuple[Fraction, ...]
"""A point with exact rational coordinates; the last coordinate is ``y`` for 2-D patterns."""

PatternType = TypeVar("PatternType", bound="Pattern")

pattern_kinds: Dict[str, Type["Pattern"]] = {}


def pattern_kind(kind: str) -> Callable[[Type[PatternType]], Type[PatternType]]:
    """Register a pattern class under the ``kind`` discriminator of the pattern file format."""

    def decorator(cls: Type[PatternType]) -> Type[PatternType]:
        cls.kind = kind
        pattern_kinds[kind] = cls
        return cls

    return decorator


def _to_points(points: Iterable[Iterable[RatLike]]) -> FrozenSet[Point]:
    return frozenset(tuple(as_rat(coord) for coord in point) for point in points)


def _positive(name: str, value: Fraction) -> None:
    if value <= 0:
        raise PatternError(f"{name} must be positive, got {value}")


class Pattern(SerializableAttrs):
    """
    Base class of the forbidden sets. Subclasses are frozen attrs classes registered with
    :func:`pattern_kind`; :meth:`deserialize` on this class dispatches on ``"kind"``.
    """

    schema_tag = SCHEMA
    kind: ClassVar[str] = ""

    def serialize(self) -> JSON:
        data = super().serialize()
        data["kind"] = self.kind
        data.setdefault("dim", self.dim)
        return data

    @classmethod
    def deserialize(cls: Type[PatternType], data: JSON) -> PatternType:
        if not isinstance(data, dict):
            raise SerializerError(f"a pattern must be a JSON object, got {data!r}")
        kind = data.get("kind")
        target = pattern_kinds.get(kind)
        if target is None:
            raise SerializerError(
                f"unknown pattern kind {kind!r}, "
                f"expected one of {', '.join(sorted(pattern_kinds))}"
            )
        if not issubclass(target, cls):
            raise SerializerError(f"expected a {cls.kind} pattern, got {kind!r}")
        target.check_raw(data)
        return super(Pattern, target).deserialize(data)

    @classmethod
    def check_raw(cls, data: Dict[str, JSON]) -> None:
        if data.get("dim", 2) != 2:
            raise SerializerError(
                f"{cls.kind} patterns are 2-dimensional, got dim {data['dim']!r}"
            )

    def _unsupported(self, operation: str) -> PatternError:
        return PatternError(f"{self.kind} patterns do not support {operation}")

    def translate(self: PatternType, *offset: RatLike) -> PatternType:
        raise self._unsupported("translate")

    def dilate(self: PatternType, q: RatLike) -> PatternType:
        raise self._unsupported("dilate")

    def reflect(self: PatternType, axis: int) -> PatternType:
        raise self._unsupported("reflect")

    def rotate90(self: PatternType) -> PatternType:
        raise self._unsupported("rotate90")


def _dilation_factor(q: RatLike) -> Fraction:
    q = as_rat(q)
    if q <= 1:
        raise PatternError(f"dilation factor must be greater than 1, got {q}")
    return q


@pattern_kind("finite")
@dataclass(frozen=True)
class FinitePattern(Pattern):
    """A finite point set in any dimension ``d >= 2``."""

    dim: int
    points: FrozenSet[Point] = field(converter=_to_points)

    def __attrs_post_init__(self) -> None:
        if self.dim < 2:
            raise PatternError(f"patterns need at least two dimensions, got {self.dim}")
        if not self.points:
            raise PatternError("a pattern needs at least one point")
        for point in self.points:
            if len(point) != self.dim:
                raise DimensionMismatchError(len(point), self.dim)

    @classmethod
    def check_raw(cls, data: Dict[str, JSON]) -> None:
        raw = data.get("points")
        if isinstance(raw, list) and all(isinstance(point, list) for point in raw):
            # canonical rationals make equal points equal strings
            if len({tuple(map(str, point)) for point in raw}) != len(raw):
                raise SerializerError("FinitePattern.points: duplicate points")

    @classmethod
    def of(cls, *points: Iterable[RatLike]) -> "FinitePattern":
        """
        Build a pattern from points, inferring the dimension.

        Examples:
            >>> FinitePattern.of((0, 0), (1, "1/2")).dim
            2
        """
        points = [tuple(point) for point in points]
        if not points:
            raise PatternError("a pattern needs at least one point")
        parsed = _to_points(points)
        if len(parsed) != len(points):
            raise PatternError("duplicate points")
        return cls(dim=len(points[0]), points=parsed)

    def axis_values(self, axis: int) -> List[Fraction]:
        return sorted({point[axis] for point in self.points})

    def axis_classes(self, axis: int) -> List[FrozenSet[Point]]:
        """The maximal subsets sharing a coordinate on ``axis``, in increasing coordinate order."""
        return [
            frozenset(point for point in self.points if point[axis] == value)
            for value in self.axis_values(axis)
        ]

    def gaps(self, axis: int) -> List[Fraction]:
        return [b - a for a, b in pairwise(self.axis_values(axis))]

    def translate(self, *offset: RatLike) -> "FinitePattern":
        if len(offset) != self.dim:
            raise DimensionMismatchError(len(offset), self.dim)
        offset = [as_rat(v) for v in offset]
        return FinitePattern(
            dim=self.dim,
            points=(tuple(c + o for c, o in zip(point, offset)) for point in self.points),
        )

    def dilate(self, q: RatLike) -> "FinitePattern":
        q = _dilation_factor(q)
        return FinitePattern(
            dim=self.dim, points=(tuple(c * q for c in point) for point in self.points)
        )

    def reflect(self, axis: int) -> "FinitePattern":
        if not 0 <= axis < self.dim:
            raise PatternError(f"axis {axis} is out of range for a {self.dim}-D pattern")
        return FinitePattern(
            dim=self.dim,
            points=(
                tuple(-c if i == axis else c for i, c in enumerate(point)) for point in self.points
            ),
        )

    def rotate90(self) -> "FinitePattern":
        """Counterclockwise rotation about the origin, ``(x, y) -> (-y, x)``."""
        if self.dim != 2:
            raise PatternError("rotate90 is only defined for 2-D patterns")
        return FinitePattern(dim=2, points=((-y, x) for x, y in self.points))


@dataclass(frozen=True, order=True)
class Segment(SerializableAttrs):
    """A closed horizontal segment ``[x_lo, x_hi] × {y}``."""

    y: Fraction = field(converter=as_rat)
    x_lo: Fraction = field(converter=as_rat)
    x_hi: Fraction = field(converter=as_rat)

    def __attrs_post_init__(self) -> None:
        if self.x_lo >= self.x_hi:
            raise PatternError(f"segment needs x_lo < x_hi, got [{self.x_lo}, {self.x_hi}]")

    @property
    def length(self) -> Fraction:
        return self.x_hi - self.x_lo


def _to_segments(segments: Iterable[Segment]) -> Tuple[Segment, ...]:
    return tuple(sorted(segments, key=lambda seg: seg.x_lo))


@pattern_kind("segments")
@dataclass(frozen=True)
class SegmentPattern(Pattern):
    """
    Finitely many closed horizontal segments with distinct ``y`` and pairwise disjoint
    x-projections, kept ordered by ``x_lo``.
    """

    dim: ClassVar[int] = 2

    segments: Tuple[Segment, ...] = field(converter=_to_segments)

    def __attrs_post_init__(self) -> None:
        if not self.segments:
            raise PatternError("a segment pattern needs at least one segment")
        if len({seg.y for seg in self.segments}) != len(self.segments):
            raise PatternError("segments must have distinct y coordinates")
        for left, right in pairwise(self.segments):
            if left.x_hi >= right.x_lo:
                raise PatternError("segment x-projections must be pairwise disjoint")

    @property
    def total_length(self) -> Fraction:
        return sum((seg.length for seg in self.segments), Fraction(0))

    def translate(self, dx: RatLike, dy: RatLike) -> "SegmentPattern":
        dx, dy = as_rat(dx), as_rat(dy)
        return SegmentPattern(
            [Segment(s.y + dy, s.x_lo + dx, s.x_hi + dx) for s in self.segments]
        )

    def dilate(self, q: RatLike) -> "SegmentPattern":
        q = _dilation_factor(q)
        return SegmentPattern([Segment(s.y * q, s.x_lo * q, s.x_hi * q) for s in self.segments])

    def reflect(self, axis: int) -> "SegmentPattern":
        if axis == 0:
            return SegmentPattern([Segment(s.y, -s.x_hi, -s.x_lo) for s in self.segments])
        elif axis == 1:
            return SegmentPattern([Segment(-s.y, s.x_lo, s.x_hi) for s in self.segments])
        raise PatternError(f"axis {axis} is out of range for a 2-D pattern")


@pattern_kind("stack")
@dataclass(frozen=True)
class StackPattern(Pattern):
    """``t`` closed segments ``[0, s] × {c, 2c, …, tc}``."""

    dim: ClassVar[int] = 2

    s: Fraction = field(converter=as_rat)
    t: int
    c: Fraction = field(converter=as_rat)

    def __attrs_post_init__(self) -> None:
        _positive("s", self.s)
        _positive("c", self.c)
        if self.t < 2:
            raise PatternError(f"a stack needs at least two segments, got t={self.t}")

    def dilate(self, q: RatLike) -> "StackPattern":
        q = _dilation_factor(q)
        return StackPattern(s=self.s * q, t=self.t, c=self.c * q)

    def endpoints(self) -> FinitePattern:
        """The ``2t`` segment endpoints; their matrix is ``J_{t,2}`` stood on its side."""
        return FinitePattern.of(
            *((x, i * self.c) for i in range(1, self.t + 1) for x in (Fraction(0), self.s))
        )


@pattern_kind("hsegment")
@dataclass(frozen=True)
class HSegment(Pattern):
    """A closed horizontal segment of length ``c``."""

    dim: ClassVar[int] = 2

    c: Fraction = field(converter=as_rat)

    def __attrs_post_init__(self) -> None:
        _positive("c", self.c)

    def dilate(self, q: RatLike) -> "HSegment":
        return HSegment(c=self.c * _dilation_factor(q))

    def as_segments(self) -> SegmentPattern:
        return SegmentPattern([Segment(0, 0, self.c)])


@pattern_kind("augmented")
@dataclass(frozen=True)
class AugmentedPattern(Pattern):
    """
    A 2-D finite pattern with a closed horizontal tail of length ``tail`` that starts at its
    :func:`anchor_point` and runs to the right.
    """

    dim: ClassVar[int] = 2

    base: FinitePattern
    tail: Fraction = field(converter=as_rat)

    def __attrs_post_init__(self) -> None:
        if self.base.dim != 2:
            raise DimensionMismatchError(self.base.dim, 2)
        _positive("tail", self.tail)

    @property
    def anchor(self) -> Point:
        return anchor_point(self.base)

    def translate(self, dx: RatLike, dy: RatLike) -> "AugmentedPattern":
        return AugmentedPattern(base=self.base.translate(dx, dy), tail=self.tail)

    def dilate(self, q: RatLike) -> "AugmentedPattern":
        q = _dilation_factor(q)
        return AugmentedPattern(base=self.base.dilate(q), tail=self.tail * q)


def parse_pattern(raw: Union[str, bytes, JSON]) -> Pattern:
    """Parse pattern JSON (text or already decoded) into the matching pattern class."""
    if isinstance(raw, (str, bytes)):
        return Pattern.parse_json(raw)
    return Pattern.deserialize(raw)


def row_classes(pattern: FinitePattern) -> List[FrozenSet[Point]]:
    """Maximal subsets sharing the last coordinate, bottom to top."""
    return pattern.axis_classes(pattern.dim - 1)


def column_classes(pattern: FinitePattern) -> List[FrozenSet[Point]]:
    """Maximal subsets sharing the first coordinate, left to right."""
    return pattern.axis_classes(0)


def pattern_to_matrix(pattern: FinitePattern) -> BitMatrix:
    """
    The order-class matrix of a finite pattern.

    For 2-D patterns row 1 is the topmost row class (largest ``y``) and column 1 the leftmost
    column class. In higher dimensions axis ``i`` of the matrix indexes the classes of
    coordinate ``i`` in increasing order.
    """
    ranks = [
        {value: rank for rank, value in enumerate(pattern.axis_values(axis))}
        for axis in range(pattern.dim)
    ]
    if pattern.dim == 2:
        height = len(ranks[1])
        return BitMatrix(
            dims=(height, len(ranks[0])),
            ones={(height - ranks[1][y], ranks[0][x] + 1) for x, y in pattern.points},
        )
    return BitMatrix(
        dims=[len(axis_ranks) for axis_ranks in ranks],
        ones={
            tuple(axis_ranks[c] + 1 for axis_ranks, c in zip(ranks, point))
            for point in pattern.points
        },
    )


_transforms: Dict[str, Callable[..., Pattern]] = {
    "rotate90": lambda pattern: pattern.rotate90(),
    "reflect_h": lambda pattern: pattern.reflect(0),
    "reflect_v": lambda pattern: pattern.reflect(1),
    "reflect": lambda pattern, axis: pattern.reflect(int(axis)),
    "translate": lambda pattern, *offset: pattern.translate(*offset),
    "dilate": lambda pattern, q: pattern.dilate(q),
}


def transform(pattern: PatternType, op: str, *args: RatLike) -> PatternType:
    """
    Apply a named geometric transform.

    Examples:
        >>> transform(FinitePattern.of((0, 0)), "translate", 1, 1).points
        frozenset({(Fraction(1, 1), Fraction(1, 1))})
    """
    try:
        func = _transforms[op]
    except KeyError:
        raise PatternError(f"unknown transform {op!r}") from None
    return func(pattern, *args)


def anchor_point(pattern: FinitePattern) -> Point:
    """The bottommost point of the rightmost column of a 2-D pattern."""
    if pattern.dim != 2:
        raise DimensionMismatchError(pattern.dim, 2)
    return min(column_classes(pattern)[-1], key=lambda point: point[1])


def append_point(pattern: FinitePattern, c: RatLike) -> FinitePattern:
    """Add a point ``c`` to the right of the anchor point. ``c = 0`` leaves the pattern as is."""
    c = as_rat(c)
    if c < 0:
        raise PatternError(f"the added point must be to the right, got c={c}")
    if c == 0:
        return pattern
    x, y = anchor_point(pattern)
    return FinitePattern(dim=2, points=pattern.points | {(x + c, y)})


def append_segment(pattern: FinitePattern, c: RatLike) -> Pattern:
    """
    Attach a closed horizontal segment of length ``c`` to the anchor point.

    A single point with a tail is just a segment, so that case returns an :class:`HSegment`.
    """
    c = as_rat(c)
    if c < 0:
        raise PatternError(f"the added segment must have non-negative length, got c={c}")
    if c == 0:
        return pattern
    anchor_point(pattern)
    if len(pattern.points) == 1:
        return HSegment(c=c)
    return AugmentedPattern(base=pattern, tail=c)


def project(pattern: FinitePattern) -> FinitePattern:
    """Drop the last coordinate of a pattern with at least three dimensions."""
    if pattern.dim < 3:
        raise PatternError("only patterns with three or more dimensions can be projected")
    return FinitePattern(dim=pattern.dim - 1, points=(point[:-1] for point in pattern.points))


def lift_pattern(pattern: FinitePattern, value: RatLike = 0) -> FinitePattern:
    """Append a constant last coordinate."""
    value = as_rat(value)
    return FinitePattern(dim=pattern.dim + 1, points=(p + (value,) for p in pattern.points))


def _all_gaps(pattern: FinitePattern) -> List[Fraction]:
    return [gap for axis in range(pattern.dim) for gap in pattern.gaps(axis)]


def min_gap(pattern: FinitePattern) -> Optional[Fraction]:
    """Smallest distance between consecutive classes on any axis, or ``None`` for a point."""
    return min(_all_gaps(pattern), default=None)


def max_gap(pattern: FinitePattern) -> Optional[Fraction]:
    return max(_all_gaps(pattern), default=None)


def pattern_id(pattern: Union[Pattern, BitMatrix]) -> PatternID:
    return PatternID(hashlib.sha256(pattern.json().encode("utf-8")).hexdigest())
