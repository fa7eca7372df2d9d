from .chain import axis_chains, branch_chains, fit_chain
from .deciders import region_contains
from .finite import (
    EmbeddingWitness,
    FiniteEmbedder,
    find_embedding,
    region_contains_augmented,
    region_contains_finite,
)
from .geometry import (
    discretize,
    embed_region,
    refine,
    region_measure,
    region_to_matrix,
    region_translate,
    region_union,
)
from .search import (
    DEFAULT_EXACT_MAX_CELLS,
    RegionAnnealer,
    RegionOracle,
    certify_region,
    px_lower_search,
    refinement_sequence,
    search_cell_map,
)
from .segments import (
    SegmentWitness,
    find_segments_embedding,
    find_stack_embedding,
    region_contains_hsegment,
    region_contains_segments,
    region_contains_stack,
    stack_segments,
    sweep,
)

__all__ = [
    "DEFAULT_EXACT_MAX_CELLS",
    "EmbeddingWitness",
    "FiniteEmbedder",
    "RegionAnnealer",
    "RegionOracle",
    "SegmentWitness",
    "axis_chains",
    "branch_chains",
    "certify_region",
    "discretize",
    "embed_region",
    "find_embedding",
    "find_segments_embedding",
    "find_stack_embedding",
    "fit_chain",
    "px_lower_search",
    "refine",
    "refinement_sequence",
    "region_contains",
    "region_contains_augmented",
    "region_contains_finite",
    "region_contains_hsegment",
    "region_contains_segments",
    "region_contains_stack",
    "region_measure",
    "region_to_matrix",
    "region_translate",
    "region_union",
    "search_cell_map",
    "stack_segments",
    "sweep",
]
