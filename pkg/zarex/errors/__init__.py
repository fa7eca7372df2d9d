from .base import (
    AlignmentError,
    CertificateError,
    DimensionMismatchError,
    GuardExceededError,
    PatternError,
    SchemaError,
    SolverError,
    UnknownCheckError,
    ZarexError,
    exit_status,
    exit_status_map,
)

__all__ = [
    "AlignmentError",
    "CertificateError",
    "DimensionMismatchError",
    "GuardExceededError",
    "PatternError",
    "SchemaError",
    "SolverError",
    "UnknownCheckError",
    "ZarexError",
    "exit_status",
    "exit_status_map",
]
