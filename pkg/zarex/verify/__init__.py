from .analytic import (
    VolumeEstimate,
    analytic_upper_stack,
    estimate_simplex_volume,
    simplex_lower_bound,
    simplex_volume,
)
from .checks import ZARANKIEWICZ_FIXTURE, fixture_document, fixture_values, grid_value
from .harness import plan, regen_fixtures, run_checks, run_job
from .oracle import embeds_points, embeds_segments, segment_samples, zarankiewicz
from .registry import (
    CheckHandler,
    check,
    checks,
    get_check,
    named_matrices,
    named_matrix,
    named_pattern,
    named_patterns,
    parse_param,
    parse_params,
    report_params,
    select_checks,
)

__all__ = [
    "ZARANKIEWICZ_FIXTURE",
    "CheckHandler",
    "VolumeEstimate",
    "analytic_upper_stack",
    "check",
    "checks",
    "embeds_points",
    "embeds_segments",
    "estimate_simplex_volume",
    "fixture_document",
    "fixture_values",
    "get_check",
    "grid_value",
    "named_matrices",
    "named_matrix",
    "named_pattern",
    "named_patterns",
    "parse_param",
    "parse_params",
    "plan",
    "regen_fixtures",
    "report_params",
    "run_checks",
    "run_job",
    "segment_samples",
    "select_checks",
    "simplex_lower_bound",
    "simplex_volume",
    "zarankiewicz",
]
