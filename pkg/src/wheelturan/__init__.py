"""Exact and heuristic Turán numbers for generalized wheels K_m + C_t."""

from wheelturan.errors import (
    CapacityExceeded,
    Graph6ParseError,
    InvalidParameter,
    RangeEmpty,
    WheelTuranError,
)
from wheelturan.graph import (
    MAX_ORDER,
    Graph,
    GraphBuilder,
    balanced_parts,
    common_neighborhood,
    decode_graph6,
    encode_graph6,
    join,
    make_clique,
    make_complete_multipartite,
    make_cycle,
    make_turan_graph,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "CapacityExceeded",
    "Graph",
    "Graph6ParseError",
    "GraphBuilder",
    "InvalidParameter",
    "RangeEmpty",
    "WheelTuranError",
    "balanced_parts",
    "common_neighborhood",
    "decode_graph6",
    "encode_graph6",
    "join",
    "make_clique",
    "make_complete_multipartite",
    "make_cycle",
    "make_turan_graph",
    "__version__",
]
