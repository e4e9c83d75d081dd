"""Smooth lattice polytopes with few lattice points: exact lattice geometry, classification, triangulations."""

from .classify import classify, minimal_smooth_2fans
from .cones import Fan, RationalCone, hilbert_basis, is_smooth, is_very_ample
from .equivalence import are_equivalent, canonical_form
from .polytope import LatticePolytope, lattice_points, normalized_volume

__all__ = [
    "Fan",
    "LatticePolytope",
    "RationalCone",
    "are_equivalent",
    "canonical_form",
    "classify",
    "hilbert_basis",
    "is_smooth",
    "is_very_ample",
    "lattice_points",
    "minimal_smooth_2fans",
    "normalized_volume",
]

__version__ = "0.1.0"
