"""Metric dimension toolkit: exact solver, constructive bounds, graph families."""

from ._resolvedim import (
    Error,
    Graph,
    alike_lower_bound,
    alike_partition,
    bipyramid_dimension,
    bipyramid_set,
    color_outerplanar,
    color_with,
    coloring_bound_set,
    distance_matrix,
    family_names,
    generate,
    hamiltonian_cycle,
    hamiltonian_outerplanar_set,
    has_minor,
    is_bipyramid,
    is_maximal_planar_certificate,
    is_outerplanar_certificate,
    is_resolving_set,
    maximal_planar_set,
    metric_dimension,
    metric_dimension_bruteforce,
    outerplanar_set,
    resolved_vertices,
)

__all__ = [
    "Error",
    "Graph",
    "alike_lower_bound",
    "alike_partition",
    "bipyramid_dimension",
    "bipyramid_set",
    "color_outerplanar",
    "color_with",
    "coloring_bound_set",
    "distance_matrix",
    "family_names",
    "generate",
    "hamiltonian_cycle",
    "hamiltonian_outerplanar_set",
    "has_minor",
    "is_bipyramid",
    "is_maximal_planar_certificate",
    "is_outerplanar_certificate",
    "is_resolving_set",
    "maximal_planar_set",
    "metric_dimension",
    "metric_dimension_bruteforce",
    "outerplanar_set",
    "resolved_vertices",
]

__version__ = "0.1.0"
