"""Local slices, cluster-tilted algebras and their tilted quotients, computed exactly."""

from .cluster import cluster_hom, enumerate_tilting, ext1_dim, is_tilting
from .derived import DerivedModel, build_model, knit
from .errors import AlgorithmFailure, BoundaryError, LocalSlicesError, ResourceError, ValidationError
from .mesh import HomSpace, MorphismVector, compose, hom_basis, hom_dim, transport_F
from .presentation import Presentation, equivalent
from .quiver import Quiver, classify, d_quiver, linear_quiver
from .repair import lift_local_slice, local_slices_through, section_through_avoiding
from .slices import (
    Verdict, enumerate_local_slices, is_local_section, is_local_slice, is_presection, is_section,
)
from .tilted import ClusterTiltedAlgebra, build_algebra
from .translation import TranslationQuiver, build_zq, delete_points, quotient_by_automorphism, synthetic_tube

__version__ = "0.1.0"

__all__ = [
    "AlgorithmFailure", "BoundaryError", "ClusterTiltedAlgebra", "DerivedModel", "HomSpace", "LocalSlicesError",
    "MorphismVector", "Presentation", "Quiver", "ResourceError", "TranslationQuiver", "ValidationError", "Verdict",
    "build_algebra", "build_model", "build_zq", "classify", "cluster_hom", "compose", "d_quiver", "delete_points",
    "enumerate_local_slices", "enumerate_tilting", "equivalent", "ext1_dim", "hom_basis", "hom_dim",
    "is_local_section", "is_local_slice", "is_presection", "is_section", "is_tilting", "knit", "lift_local_slice",
    "linear_quiver", "local_slices_through", "quotient_by_automorphism", "section_through_avoiding",
    "synthetic_tube", "transport_F",
]
