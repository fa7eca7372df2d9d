# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Dict, List, Optional
from fractions import Fraction

from attr import dataclass

from .matrix import BitMatrix
from .primitive import JSON, SCHEMA, CacheKey, PatternID
from .rational import format_decimal
from .region import GridRegion
from .util import SerializableAttrs, SerializableEnum, field


class BoundKind(SerializableEnum):
    EXACT = "exact"
    LOWER = "lower"
    UPPER = "upper"


class RecordKind(SerializableEnum):
    """Which extremal function a record is about."""

    EX = "ex"
    PX = "px"


class ExMode(SerializableEnum):
    EXACT = "exact"
    HEURISTIC = "heuristic"
    RANDOM_DELETION = "random-deletion"


class SearchMethod(SerializableEnum):
    EXACT = "exact"
    GREEDY = "greedy"
    ANNEAL = "anneal"


class Relation(SerializableEnum):
    LE = "<="
    GE = ">="
    EQ = "="

    def holds(self, left: Fraction, right: Fraction) -> bool:
        if self == Relation.LE:
            return left <= right
        elif self == Relation.GE:
            return left >= right
        return left == right


@dataclass(frozen=True)
class ExtremalRecord(SerializableAttrs):
    """
    The result of one extremal computation.

    ``value`` counts ones of the certificate matrix (``kind = ex``) or occupied cells of the
    certificate region (``kind = px``, where ``measure = value·g^d``). ``n`` is the side length,
    an integer for matrices.
    """

    schema_tag = SCHEMA

    kind: RecordKind
    pattern_id: PatternID
    n: Fraction
    d: int
    value: int
    bound: BoundKind
    method: str
    certificate: Optional[BitMatrix] = None
    region: Optional[GridRegion] = None
    r: Optional[int] = None
    measure: Optional[Fraction] = None
    seed: Optional[int] = None
    p: Optional[Fraction] = None
    restarts: Optional[int] = None
    symmetry_breaking: bool = field(default=False, omit_default=True)
    elapsed_ms: int = 0

    def timeless(self) -> JSON:
        """The serialized record without the wall-clock field."""
        data = self.serialize()
        data.pop("elapsed_ms", None)
        return data


@dataclass(frozen=True)
class CheckReport(SerializableAttrs):
    """
    Both sides of one inequality instance. ``middle`` turns the report into a sandwich
    ``lhs R middle R rhs``. Whether it passed is always recomputed from the numbers.
    """

    schema_tag = SCHEMA

    check_id: str
    params: Dict[str, JSON]
    lhs: Fraction
    rhs: Fraction
    relation: Relation
    middle: Optional[Fraction] = None
    artifacts: List[str] = field(factory=list, omit_empty=True)
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.middle is None:
            return self.relation.holds(self.lhs, self.rhs)
        return self.relation.holds(self.lhs, self.middle) and self.relation.holds(
            self.middle, self.rhs
        )

    def serialize(self) -> JSON:
        data = super().serialize()
        if not self.artifacts:
            data.pop("artifacts", None)
        data["pass"] = self.passed
        data["decimal"] = {
            key: format_decimal(value)
            for key, value in (("lhs", self.lhs), ("middle", self.middle), ("rhs", self.rhs))
            if value is not None
        }
        return data


@dataclass(frozen=True)
class CacheEntry(SerializableAttrs):
    """One line of the result cache."""

    schema_tag = SCHEMA

    key: CacheKey
    operation: str
    params: JSON
    record: JSON
    created_at: str
    tool_version: str

    def load(self) -> List[SerializableAttrs]:
        """Deserialize the cached payload, which is one record or a list of reports."""
        items = self.record if isinstance(self.record, list) else [self.record]
        return [
            (
                CheckReport.deserialize(item)
                if "check_id" in item
                else ExtremalRecord.deserialize(item)
            )
            for item in items
        ]
