"""Exact and kernelized solvers for maximum edge 2-coloring."""

from ._core import (
    C4Found,
    EdgeLimitExceeded,
    Error,
    Graph,
    InvalidInput,
    KernelResult,
    ParseError,
    Refusal,
    VerifyReport,
    approx_coloring,
    gen_random,
    gen_two_factor,
    kernelize,
    lift_coloring,
    load_graph,
    render_coloring,
    render_graph,
    sigma_exact,
    sigma_frontier,
    solve,
    verify,
)

__all__ = [
    "C4Found",
    "EdgeLimitExceeded",
    "Error",
    "Graph",
    "InvalidInput",
    "KernelResult",
    "ParseError",
    "Refusal",
    "VerifyReport",
    "approx_coloring",
    "gen_random",
    "gen_two_factor",
    "kernelize",
    "lift_coloring",
    "load_graph",
    "render_coloring",
    "render_graph",
    "sigma_exact",
    "sigma_frontier",
    "solve",
    "verify",
]
