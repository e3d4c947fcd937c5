"""Algebraic degree stability of Boolean functions on affine subspaces.

The package measures how the algebraic degree of a Boolean function
behaves when the function is restricted to affine subspaces of its
domain: which subspaces force the degree to drop, how many of them
there are, and how functions that resist any drop can be counted and
constructed.
"""

from .anf import ANF, NEG_INF, parse
from .counting import (
    dd_hyperplane_histogram,
    dd_probability,
    degstab_bounds,
    gaussian_binomial,
    k1_count,
)
from .degreedrop import (
    DegreeDropProfile,
    check_dd_fast_duality,
    dd_hyperplane_normal_space,
    deg_stab,
    enumerate_degree_drop,
    fast_points,
    has_degree_drop_space,
    k_membership,
    profile,
)
from .errors import (
    CatalogMismatchError,
    ConstantFunctionError,
    DegstabError,
    NotHomogeneousError,
    NotSymmetricError,
)
from .f2 import F2Matrix
from .invariants import r_k, r_values
from .subspaces import (
    LinearSubspace,
    count_codim,
    enumerate_codim,
    format_subspace,
    parse_subspace,
    restrict,
)

__all__ = [
    "ANF",
    "NEG_INF",
    "parse",
    "F2Matrix",
    "LinearSubspace",
    "count_codim",
    "enumerate_codim",
    "format_subspace",
    "parse_subspace",
    "restrict",
    "DegreeDropProfile",
    "profile",
    "deg_stab",
    "enumerate_degree_drop",
    "has_degree_drop_space",
    "k_membership",
    "dd_hyperplane_normal_space",
    "fast_points",
    "check_dd_fast_duality",
    "r_k",
    "r_values",
    "gaussian_binomial",
    "k1_count",
    "dd_hyperplane_histogram",
    "dd_probability",
    "degstab_bounds",
    "DegstabError",
    "NotHomogeneousError",
    "NotSymmetricError",
    "ConstantFunctionError",
    "CatalogMismatchError",
]
