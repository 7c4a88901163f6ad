"""Plane rigidity and hyperconnectivity matroids on small graphs."""

from ._planerig import (
    CapExceeded,
    Graph,
    ParseError,
    PreconditionError,
    are_isomorphic,
    canonical_graph6,
    check_duality,
    complete,
    complete_bipartite,
    cycle,
    find_bernstein_orientation,
    generate_connected_cubic,
    h_independent,
    h_rank_symbolic,
    is_bernstein,
    laman_count_ok,
    petersen,
    r_independent,
    r_rank,
    run_suite,
    triangular_prism,
    ufp_configuration,
    verify_ufp,
    wedge_independent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
