"""Edge-regular graphs with regular cliques: construction and exact certification."""

from .cliques import (
    CliqueSpread,
    RegularClique,
    SearchBudgetExceeded,
    clique_nexus,
    delete_clique,
    find_spread,
    maximal_cliques,
    regular_cliques,
    triangle_edge_census,
)
from .construction import FtPlan, PlanError, build_ft, canonical_spread, plan_ft, verify_construction
from .graph import (
    INF,
    DistanceTable,
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    distances,
    from_edge_list,
    grid,
    icosahedron,
    path_graph,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .isomorphism import are_isomorphic, find_isomorphism, is_isomorphism
from .regularity import (
    AntipodalCert,
    EdgeRegularCert,
    IntersectionArray,
    NotCertified,
    StronglyRegularCert,
    antipodal_classes,
    common_neighbour_count,
    edge_regular_params,
    intersection_array,
    is_taylor,
    mu_multiset,
    regular_degree,
    strongly_regular_params,
)

__version__ = "0.1.0"
