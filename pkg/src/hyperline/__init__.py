"""Line graphs of k-uniform hypergraphs with bounded pair multiplicity:
recognition with certificates, witness-hypergraph reconstruction, and
flow-based realization of constant degree sequences."""

from .baranyai import (
    ExtensionNetwork,
    Flow,
    FlowNetwork,
    PartitionState,
    baranyai_partition,
    build_extension_network,
    extend,
    initial_state,
    max_flow,
    regular_hypergraph,
    state_violations,
)
from .errors import (
    DivisibilityError,
    InputError,
    InternalContradictionError,
    NotAMemberError,
    ResourceLimitError,
    UnrealizableError,
)
from .graph import (
    Claw,
    Graph,
    common_neighborhood,
    edge_degree,
    find_claw,
    line_graph,
    maximal_cliques,
    min_edge_degree,
)
from .hypergraph import Hypergraph
from .oracle import (
    ScanReport,
    cover_search,
    graphs_isomorphic,
    is_member_bruteforce,
    scan_regular_realizability,
)
from .recognition import (
    ClawWitness,
    F1Witness,
    F2Witness,
    F3Witness,
    Inconclusive,
    Member,
    NonMember,
    Thresholds,
    Verdict,
    Witness,
    check_claw,
    check_f1,
    check_f2,
    check_f3,
    recognize,
    thresholds,
)
from .reconstruction import (
    CliqueCover,
    CoverDiagnostics,
    cover_to_hypergraph,
    hypergraph_to_cover,
    krausz_cover,
    reconstruct,
    validate_cover,
)

__all__ = [
    "Claw",
    "ClawWitness",
    "CliqueCover",
    "CoverDiagnostics",
    "DivisibilityError",
    "ExtensionNetwork",
    "F1Witness",
    "F2Witness",
    "F3Witness",
    "Flow",
    "FlowNetwork",
    "Graph",
    "Hypergraph",
    "Inconclusive",
    "InputError",
    "InternalContradictionError",
    "Member",
    "NonMember",
    "NotAMemberError",
    "PartitionState",
    "ResourceLimitError",
    "ScanReport",
    "Thresholds",
    "UnrealizableError",
    "Verdict",
    "Witness",
    "baranyai_partition",
    "build_extension_network",
    "check_claw",
    "check_f1",
    "check_f2",
    "check_f3",
    "common_neighborhood",
    "cover_search",
    "cover_to_hypergraph",
    "edge_degree",
    "extend",
    "find_claw",
    "graphs_isomorphic",
    "hypergraph_to_cover",
    "initial_state",
    "is_member_bruteforce",
    "krausz_cover",
    "line_graph",
    "max_flow",
    "maximal_cliques",
    "min_edge_degree",
    "recognize",
    "reconstruct",
    "regular_hypergraph",
    "scan_regular_realizability",
    "state_violations",
    "thresholds",
    "validate_cover",
]
