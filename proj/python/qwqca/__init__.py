"""Coined and staggered quantum walks compiled to partitioned quantum cellular automata."""

from ._core import (
    Automaton,
    CoinedWalk,
    Graph,
    StaggeredWalk,
    __version__,
    balanced_coin,
    build_cycle,
    build_torus,
    cover_violations,
    cycle_cover,
    equivalence_run,
    exp_reflection,
    exp_series,
    graph_from_edges,
    grover_coin,
    is_unitary,
    sigma_series,
    torus_cover,
)

__all__ = [
    "Automaton",
    "CoinedWalk",
    "Graph",
    "StaggeredWalk",
    "__version__",
    "balanced_coin",
    "build_cycle",
    "build_torus",
    "cover_violations",
    "cycle_cover",
    "equivalence_run",
    "exp_reflection",
    "exp_series",
    "graph_from_edges",
    "grover_coin",
    "is_unitary",
    "sigma_series",
    "torus_cover",
]
