"""Deterministic parallel primal-dual approximation for weighted vertex and set cover.

Typical use::

    from pdcover import build_hypergraph, solve, certify

    h = build_hypergraph([1, 1, 1], [(0, 1), (1, 2), (2, 0)])
    res = solve(h, eps="0.1")
    certify(h, res.cover, res.original_packing(), res.eps).passed
"""

from .certificates import (
    CertificateReport,
    certify,
    check_duality,
    check_integer_tightening,
    check_slackness,
    verify_cover,
    verify_eps_maximal,
    verify_packing,
)
from .engine import (
    CoverResult,
    NumericMode,
    PackingState,
    RoundReport,
    good_vertex_fraction,
    init_state,
    potential,
    round_bound,
    run_cover,
    run_round,
    scale_weights_integer,
    solve,
    work_bound,
)
from .errors import *  # noqa: F401,F403
from .hypergraph import (
    GraphStats,
    Hypergraph,
    SetCoverInstance,
    build_hypergraph,
    cover_to_set_solution,
    from_set_cover,
    packing_to_element_solution,
    stats,
)
from .io import emit_instance, generate, generate_instance, parse_instance
from .reference import OracleResult, bar_yehuda_even, brute_force_min_cover

__version__ = "0.1.0"
