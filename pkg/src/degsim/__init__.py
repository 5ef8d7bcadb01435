"""Exact analysis of graph matrix pencils A - mu*D.

Computes generalized characteristic polynomials, Smith normal forms over
Q(mu)[t], and Ihara zeta polynomials, and constructs and certifies
degree-similar graph pairs with explicit exact transformation matrices.
"""

from .algebra import (
    BiPoly,
    Rational,
    RatFn,
    RatFnPoly,
    UniPoly,
    bareiss_det,
    eval_mu,
    lagrange_interpolate,
    mat_inverse_rational,
    mat_kron,
    mat_mul,
    poly_gcd,
    ratfnpoly_gcd,
)
from .certify import (
    CertBlock,
    Certificate,
    NecessaryReport,
    certificate_for_addjoin,
    certificate_for_class_join,
    certificate_for_complement,
    certificate_for_join,
    certificate_for_ksum,
    certificate_for_pendants,
    certificate_for_product,
    certificate_for_rooted_product,
    certificate_for_switching,
    certificate_for_union,
    certificate_for_vertex_deletion,
    necessary_battery,
    verify_certificate,
)
from .graphs import (
    Graph,
    RootedGraph,
    SwitchingPartition,
    SwitchingReport,
    add_join_vertices,
    attach_pendants,
    coalesce,
    complement,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    emit_graph6,
    empty_graph,
    find_isomorphism,
    induced_subgraph,
    isomorphic,
    join,
    k_sum,
    local_switch,
    mckay_tree_1,
    mckay_tree_2,
    parse_graph6,
    path_graph,
    product,
    rooted_product,
    union,
    validate_switching,
)
from .pencil import (
    PencilSNF,
    SpectralProfile,
    adjacency_charpoly,
    bordered_charpoly,
    deg_scaled_charpoly,
    laplacian_charpoly,
    pencil_charpoly,
    pencil_matrix,
    pencil_similar,
    pencil_snf,
    signless_charpoly,
    snf_invariant_factors,
    spectral_profile,
)
from .zeta import WalkSeries, check_walk_identity, ihara_reciprocal, reduced_walk_series

__version__ = "0.1.0"
