"""graphmine: subgraph enumeration and community analysis toolkit.

Four algorithm families share one graph core: plain and amortized
k-graphlet enumeration, cache-aware truncated-recursion counting,
temporal (k,h,W)-core analysis, and (1+eps)-approximate densest
subgraphs via dynamic edge orientation. Brute-force oracles back every
fast path at test scale.
"""

from .baseline import EnumStats, failure_leaf_report, ks_enumerate
from .amortized import (AmortizedContext, amortized_enum, edge_graphlets,
                        enum_all_graphlets, fruitful, linear_enum,
                        mark_mandatory, removable)
from .cage import (CompressedRecord, cage_enumerate, cage_records,
                   decompress_records, emit_compressed, format_record,
                   parse_record)
from .core import (LineGraphResult, MutableGraph, StaticGraph, TemporalEdges,
                   VertexSet, line_graph, parse_edge_list, read_edge_list,
                   truncated_bfs)
from .errors import EdgeListError, GraphmineError, UsageError
from .oracle import (OracleResult, brute_connected_subgraph_count,
                     brute_densest, brute_k_graphlets, peel_coreness)

__version__ = "0.1.0"

__all__ = [
    "AmortizedContext", "CompressedRecord", "EdgeListError", "EnumStats",
    "GraphmineError", "LineGraphResult", "MutableGraph", "OracleResult",
    "StaticGraph", "TemporalEdges", "UsageError", "VertexSet",
    "amortized_enum", "brute_connected_subgraph_count", "brute_densest",
    "brute_k_graphlets", "cage_enumerate", "cage_records",
    "decompress_records", "edge_graphlets", "emit_compressed",
    "enum_all_graphlets", "failure_leaf_report", "format_record",
    "fruitful", "ks_enumerate", "line_graph", "linear_enum",
    "mark_mandatory", "parse_edge_list", "parse_record", "peel_coreness",
    "read_edge_list", "removable", "truncated_bfs",
]
