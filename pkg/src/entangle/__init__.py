"""Entanglement of finite graphs via Robber-and-Cops games, with executable minor-theory checks."""

from .entanglement import (
    EntanglementResult,
    ReactiveStrategy,
    Strategy,
    VerificationReport,
    entanglement,
    entanglement_value,
    extract_strategy,
    verify_strategy,
)
from .game import (
    INITIAL,
    Arena,
    Position,
    Turn,
    Variant,
    WinningRegion,
    build_arena,
    cops_moves,
    cops_win,
    robber_moves,
    solve,
    solve_game,
)
from .graph import (
    ContractionMap,
    Graph,
    MinorOperation,
    canonical_form,
    contract_edge,
    delete_edge,
    delete_vertex,
    graphs_on,
    graphs_up_to,
    is_minor,
    neighbors,
    one_step_minors,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .minors import (
    ObstructionSet,
    TheoremReport,
    check_direct_minor_bound,
    check_minor_monotonicity,
    check_strategy_roundtrip,
    check_subgraph_lemma,
    check_transfer,
    check_variant_equivalence,
    check_vertex_deletion_claim,
    find_obstructions,
    transfer_strategy,
)
from .oracle import oracle_cops_win, oracle_entanglement

__version__ = "0.1.0"
