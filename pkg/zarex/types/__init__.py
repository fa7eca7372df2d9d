from .matrix import BitMatrix
from .pattern import (
    AugmentedPattern,
    FinitePattern,
    HSegment,
    Pattern,
    Point,
    Segment,
    SegmentPattern,
    StackPattern,
    anchor_point,
    append_point,
    append_segment,
    column_classes,
    lift_pattern,
    max_gap,
    min_gap,
    parse_pattern,
    pattern_id,
    pattern_kind,
    pattern_to_matrix,
    project,
    row_classes,
    transform,
)
from .primitive import JSON, SCHEMA, CacheKey, Index, PatternID
from .rational import (
    EpsRat,
    Rat,
    RatLike,
    as_rat,
    ceil_div,
    common_unit,
    format_decimal,
    format_rat,
    iroot,
    is_multiple,
    parse_rat,
    root_upper,
)
from .record import (
    BoundKind,
    CacheEntry,
    CheckReport,
    ExMode,
    ExtremalRecord,
    RecordKind,
    Relation,
    SearchMethod,
)
from .region import GridRegion
from .util import (
    Serializable,
    SerializableAttrs,
    SerializableEnum,
    SerializerError,
    deserializer,
    dumps,
    field,
    serializer,
)

__all__ = [
    "AugmentedPattern",
    "BitMatrix",
    "BoundKind",
    "CacheEntry",
    "CacheKey",
    "CheckReport",
    "EpsRat",
    "ExMode",
    "ExtremalRecord",
    "FinitePattern",
    "GridRegion",
    "HSegment",
    "Index",
    "JSON",
    "Pattern",
    "PatternID",
    "Point",
    "Rat",
    "RatLike",
    "RecordKind",
    "Relation",
    "SCHEMA",
    "SearchMethod",
    "Segment",
    "SegmentPattern",
    "Serializable",
    "SerializableAttrs",
    "SerializableEnum",
    "SerializerError",
    "StackPattern",
    "anchor_point",
    "append_point",
    "append_segment",
    "as_rat",
    "ceil_div",
    "column_classes",
    "common_unit",
    "deserializer",
    "dumps",
    "field",
    "format_decimal",
    "format_rat",
    "iroot",
    "is_multiple",
    "lift_pattern",
    "max_gap",
    "min_gap",
    "parse_pattern",
    "parse_rat",
    "pattern_id",
    "pattern_kind",
    "pattern_to_matrix",
    "project",
    "root_upper",
    "row_classes",
    "serializer",
    "transform",
]
