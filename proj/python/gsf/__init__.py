"""Streaming graph sketches and parameterized deletion solvers.

Vertex ids are 0-based here; the text stream format is 1-based.
"""

from ._core import (
    BudgetExceeded,
    Graph,
    MalformedStream,
    ParseError,
    Stream,
    common_neighbor,
    dea_with_deletions,
    gen_disj,
    gen_perm,
    graph_to_stream,
    oracle,
    parse_stream,
    perm_value,
    replay,
    run_cvd,
    run_pipeline,
    solve,
    validate,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "MalformedStream",
    "ParseError",
    "Stream",
    "common_neighbor",
    "dea_with_deletions",
    "gen_disj",
    "gen_perm",
    "graph_to_stream",
    "oracle",
    "parse_stream",
    "perm_value",
    "replay",
    "run_cvd",
    "run_pipeline",
    "solve",
    "validate",
]
