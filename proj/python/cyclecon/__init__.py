"""Short-cycle connectivity relations and weighted cycle networks."""

from ._core import (
    BudgetExceeded,
    DirectedGraph,
    ParseError,
    UndirectedGraph,
    bk_related,
    ck_components,
    clique_weight_lower_bound,
    cyclic_reduction,
    directed_triangle_networks,
    dk_arc_classes,
    everett_decomposition,
    feedback_network,
    hh0_components,
    k3_components,
    k_long_arcs,
    k_transitive_arcs,
    kgonal_network,
    kk_components,
    kr_clique_components,
    l3_edge_classes,
    lk_edge_classes,
    mutual_tk_classes,
    oracle,
    reachable_set,
    read_network,
    remove_transitive_path,
    sk_components,
    strong_components,
    tk_reachability,
    transitive_support_networks,
    triangle_count_per_vertex,
    triangular_network,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
