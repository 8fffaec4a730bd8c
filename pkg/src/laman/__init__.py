"""Laman numbers of minimally rigid graphs, computed exactly by a bigraph recursion."""

from .graph import (
    Bigraph,
    GraphError,
    MultiGraph,
    components,
    contract,
    delete,
    dimension,
    duplicate,
    has_self_loop,
    is_bridge,
    is_pseudo_laman,
)
from .canon import canonical_key
from .lamnumber import (
    LamConfig,
    LamOverflowError,
    LamResult,
    LamStats,
    MemoTable,
    NotLamanError,
    choose_pivot,
    lam,
    lam_graph,
    lam_graph_with_stats,
    lam_with_stats,
    left_quot,
    right_quot,
    subset_pairs,
)
from .rigidity import (
    HennebergStep,
    apply_henneberg1,
    apply_henneberg2,
    henneberg_sequence,
    is_laman,
    laman_violation,
    pebble_game,
)
from .catalog import CapExceeded, enumerate_laman, extremal_laman
from .oracle import OracleConfig, build_system, count_solutions, verify
from .formats import ParseError, emit_graph6, parse_graph, parse_graph6

__all__ = [
    "Bigraph",
    "GraphError",
    "MultiGraph",
    "components",
    "contract",
    "delete",
    "dimension",
    "duplicate",
    "has_self_loop",
    "is_bridge",
    "is_pseudo_laman",
    "canonical_key",
    "LamConfig",
    "LamOverflowError",
    "LamResult",
    "LamStats",
    "MemoTable",
    "NotLamanError",
    "choose_pivot",
    "lam",
    "lam_graph",
    "lam_graph_with_stats",
    "lam_with_stats",
    "left_quot",
    "right_quot",
    "subset_pairs",
    "HennebergStep",
    "apply_henneberg1",
    "apply_henneberg2",
    "henneberg_sequence",
    "is_laman",
    "laman_violation",
    "pebble_game",
    "CapExceeded",
    "enumerate_laman",
    "extremal_laman",
    "OracleConfig",
    "build_system",
    "count_solutions",
    "verify",
    "ParseError",
    "emit_graph6",
    "parse_graph",
    "parse_graph6",
]
