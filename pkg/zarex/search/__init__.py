from .engine import BoxSearch, CellMap, SearchOracle, SearchResult, block_shapes, run_subtree
from .rows import RowSearch, RowTables, row_tables, run_first_row

__all__ = [
    "BoxSearch",
    "CellMap",
    "SearchOracle",
    "SearchResult",
    "block_shapes",
    "run_subtree",
    "RowSearch",
    "RowTables",
    "row_tables",
    "run_first_row",
]
