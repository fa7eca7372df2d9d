from .inequalities import ExTable, check_superadditive, check_tardos_blank
from .solver import (
    DEFAULT_EXACT_MAX_CELLS,
    MatrixOracle,
    certify,
    default_probability,
    deletion_lower_bound,
    ex_exact,
    ex_lower_heuristic,
    ex_lower_random_deletion,
    expected_copies,
)

__all__ = [
    "DEFAULT_EXACT_MAX_CELLS",
    "ExTable",
    "MatrixOracle",
    "certify",
    "check_superadditive",
    "check_tardos_blank",
    "default_probability",
    "deletion_lower_bound",
    "ex_exact",
    "ex_lower_heuristic",
    "ex_lower_random_deletion",
    "expected_copies",
]
