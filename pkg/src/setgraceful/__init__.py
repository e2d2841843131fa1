"""Set-graceful labelings of finite simple graphs: decide, search, verify."""

from setgraceful.conditions import (
    EDGE_COUNT_INFEASIBLE,
    NON_STAR_IMPOSSIBLE,
    STAR_ADMITS,
    FeasibilityVerdict,
    ProofStep,
    ProofTrace,
    StarDecision,
    TraceNotApplicableError,
    construct_star_labeling,
    feasible_ground_size,
    proof_trace,
    star_theorem_decision,
)
from setgraceful.graph import (
    Bipartition,
    Graph,
    GraphParseError,
    complete_bipartition,
    make_complete_bipartite,
    make_cycle,
    make_path,
    read_graph,
    write_graph,
)
from setgraceful.labeling import (
    Labeling,
    LabelingParseError,
    ValidationReport,
    edge_labels,
    edge_preimage,
    normalize_anchor,
    read_labeling,
    translate,
    validate,
    write_labeling,
)
from setgraceful.labels import (
    MAX_GROUND_SIZE,
    check_ground_size,
    format_label,
    parse_label,
    sym_diff,
)
from setgraceful.oracle import EnumerationCapError, brute_force_enumerate
from setgraceful.search import SearchConfig, SearchOutcome, search, vertex_order

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "EDGE_COUNT_INFEASIBLE",
    "EnumerationCapError",
    "FeasibilityVerdict",
    "Graph",
    "GraphParseError",
    "Labeling",
    "LabelingParseError",
    "MAX_GROUND_SIZE",
    "NON_STAR_IMPOSSIBLE",
    "ProofStep",
    "ProofTrace",
    "STAR_ADMITS",
    "SearchConfig",
    "SearchOutcome",
    "StarDecision",
    "TraceNotApplicableError",
    "ValidationReport",
    "brute_force_enumerate",
    "check_ground_size",
    "complete_bipartition",
    "construct_star_labeling",
    "edge_labels",
    "edge_preimage",
    "feasible_ground_size",
    "format_label",
    "make_complete_bipartite",
    "make_cycle",
    "make_path",
    "normalize_anchor",
    "parse_label",
    "proof_trace",
    "read_graph",
    "read_labeling",
    "search",
    "star_theorem_decision",
    "sym_diff",
    "translate",
    "validate",
    "vertex_order",
    "write_graph",
    "write_labeling",
]
