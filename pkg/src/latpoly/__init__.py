"""Exact lattice-point counts, volumes and the minimal-volume equality for lattice polytopes."""

from .castelnuovo import is_castelnuovo, realize_triplet, scan, scott_triplets_d2
from .core import LatticePolytope, affine_rank, validate_polytope
from .counting import (
    LatticeProfile,
    ehrhart_values,
    enumerate_lattice_points,
    interior_via_reciprocity,
    lower_bound_nvol,
    normalized_volume,
    profile,
)
from .hull import FacetInequality, PointLocation, classify_point, enumerate_facets

__all__ = [
    "FacetInequality",
    "LatticePolytope",
    "LatticeProfile",
    "PointLocation",
    "affine_rank",
    "classify_point",
    "ehrhart_values",
    "enumerate_facets",
    "enumerate_lattice_points",
    "interior_via_reciprocity",
    "is_castelnuovo",
    "lower_bound_nvol",
    "normalized_volume",
    "profile",
    "realize_triplet",
    "scan",
    "scott_triplets_d2",
    "validate_polytope",
]
