"""Exact enumeration, counting and lower-bound certificates for integer points
of the Hadamard polytope and its dilates."""

from .gf2 import (
    GF2AffineSubspace,
    GF2Subspace,
    GF2Vector,
    coset_canonical_rep,
    dot,
    enumerate_affine_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    orthogonal_complement,
    rref_basis,
)
from .hadamard import (
    BarycentricProfile,
    LatticePoint,
    dilate_membership,
    fwht,
    hadamard_column,
    hadamard_entry,
    projected_membership,
)
from .lattice import (
    affine_subspace_from_point,
    cor1_count_formula,
    count_dilate,
    ehrhart_interpolate,
    enumerate_dilate_points,
    enumerate_unit_points,
    point_from_affine_subspace,
)
from .bounds import (
    BoundReport,
    Case1Family,
    DensityEstimate,
    HypercubeSpec,
    case1_count_lower_bound,
    case1_enumerate_families,
    case1_verify_injectivity,
    case3_lower_bound_value,
    case3_sample_density,
    theorem1_bound,
)

__version__ = "0.1.0"
