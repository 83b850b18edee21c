"""Exact determinants of graph distance matrices and closed-form checks for
trees, unicyclic graphs and bicyclic graphs with edge-disjoint cycles."""

from .formulas import base_values, bicyclic_det, solve_recurrence, tree_det, unicyclic_det
from .graph import (
    BicyclicShape,
    Graph,
    classify_bicyclic,
    distance_matrix,
    from_edge_list,
    generate_cycle,
    generate_gpqn,
    generate_infinity,
    plant_random_trees,
)
from .linalg import IntMatrix, RationalMatrix, det_bareiss, det_naive
from .transforms import JoinSpec, attach_pendant, edge_join, identify_plus_pendant, normal_form

__all__ = [
    "BicyclicShape", "Graph", "IntMatrix", "JoinSpec", "RationalMatrix",
    "attach_pendant", "base_values", "bicyclic_det", "classify_bicyclic", "det_bareiss",
    "det_naive", "distance_matrix", "edge_join", "from_edge_list", "generate_cycle",
    "generate_gpqn", "generate_infinity", "identify_plus_pendant", "normal_form",
    "plant_random_trees", "solve_recurrence", "tree_det", "unicyclic_det",
]
