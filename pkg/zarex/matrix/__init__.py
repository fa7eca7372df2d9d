from .contains import (
    SubmatrixMatcher,
    contains_through,
    count_copies,
    find_copy,
    fit_last,
    matrix_contains,
)
from .ops import all_ones, blowup, identity, lift_matrix, reflect, rotate90, single_one, transpose

__all__ = [
    "SubmatrixMatcher",
    "all_ones",
    "blowup",
    "contains_through",
    "count_copies",
    "find_copy",
    "fit_last",
    "identity",
    "lift_matrix",
    "matrix_contains",
    "reflect",
    "rotate90",
    "single_one",
    "transpose",
]
