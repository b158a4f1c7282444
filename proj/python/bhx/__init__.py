"""Balanced hypercubes BH_n, extremal induced subgraphs e_g and g-extra edge-connectivity."""

from ._bhx import (
    Graph,
    Refusal,
    VerificationFailure,
    boundary,
    build_bh,
    build_graph,
    build_xn,
    beta,
    check_witness,
    conjecture_value,
    construct,
    decode,
    edge_orbit_count,
    eg_bounds,
    eg_exact,
    eg_exhaustive,
    encode,
    equivalent_vertex,
    extra_edge_connectivity,
    gamma,
    girth,
    neighbors,
    pipeline,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
