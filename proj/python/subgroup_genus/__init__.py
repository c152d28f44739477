"""Subgroup lattices of finite groups, their Hasse graphs, and genus bounds."""

from ._core import (
    DEFAULT_ORDER_CAP,
    Error,
    Graph,
    Group,
    Lattice,
    OmegaFamily,
    build_group,
    canonical_spec,
    ciclo_bound,
    ciclo_exact_euler,
    complete,
    complete_bipartite,
    cycle_graph,
    euler_lower_bound,
    exact_genus,
    grid_graph,
    hypercube,
    is_bipartite,
    is_connected,
    is_planar,
    is_triangle_free,
    pls_bound,
    psl_dihedral_family,
    qbin,
    rango_bound,
    rank_layer_family,
    subgroup_lattice,
    sylow_hypercube,
    verify_psl_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
