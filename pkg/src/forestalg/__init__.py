"""Symbolic algebra of decorated rooted trees, forests and graphs with exact
rational coefficients, with Butcher-series utilities on top."""

from .brackets import ParseError, parse_forest, parse_tree, serialize_forest
from .bseries import (
    BUILTIN_TABLEAUX,
    ButcherTableau,
    CoefficientMap,
    bseries,
    bseries_vector,
    check_order,
    compose_maps,
    exact_coefficients,
    extend_to_forests,
    load_tableau,
    order_conditions,
    rk_elementary_weights,
)
from .forest import (
    DOT,
    Forest,
    Tree,
    b_minus,
    b_plus,
    bullet,
    canonical_compare,
    concat,
    enumerate_forests,
    enumerate_trees,
    gamma,
    inner_product_sigma,
    order,
    sigma,
)
from .graphalg import (
    DanglingEdge,
    IntegerGraph,
    NoSuchVertex,
    RootedGraph,
    graft_graph,
    graft_graph_to,
    integer_graph,
    rooted,
)
from .render import (
    elementary_differential,
    texify,
    texify_forest,
    texify_vector,
    text_vector,
    to_json,
    write_latex_document,
)
from .treealg import (
    ForestPair,
    connes_kreimer,
    counit,
    deshuffle,
    exp_graft,
    graft,
    graft_forest,
    graft_guin_oudom_oracle,
    graft_tree,
    grossman_larson,
    symmetric_product,
)
from .vecspace import (
    GradedSeries,
    GradedVector,
    Multiset,
    NonMonotoneGrading,
    Term,
    add,
    bilinear,
    coefficient_of,
    linear,
    scale,
    series_from_nondecreasing,
    take_grades,
    term,
    vector_from_terms,
)

__version__ = "0.1.0"
