"""Computational toolkit for rational de Branges-Rovnyak spaces."""

from .config import DEFAULT_TOLERANCES, Tolerances, resolve_seed
from .extension import (
    ExtensionResult,
    ModelResult,
    brownian_shift_symbol,
    build_model,
    extend,
    kernel_factorization_check,
    mobius_normalize,
)
from .factorization import (
    MateResult,
    boundary_order,
    inner_outer,
    is_nonextreme,
    pythagorean_mate,
)
from .isometry import (
    DefectReport,
    annihilation_check,
    defect_form,
    isometry_order,
    rank_one_identity_check,
)
from .lattice import (
    SubspaceDescriptor,
    classify,
    is_cyclic,
    ladder_spaces,
    membership,
    subspace_distance,
)
from .polynomials import Poly, RationalFn, as_rational
from .space import HbSpace, HbVector

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCES",
    "DefectReport",
    "ExtensionResult",
    "HbSpace",
    "HbVector",
    "MateResult",
    "ModelResult",
    "Poly",
    "RationalFn",
    "SubspaceDescriptor",
    "Tolerances",
    "annihilation_check",
    "as_rational",
    "boundary_order",
    "brownian_shift_symbol",
    "build_model",
    "classify",
    "defect_form",
    "extend",
    "inner_outer",
    "is_cyclic",
    "is_nonextreme",
    "isometry_order",
    "kernel_factorization_check",
    "ladder_spaces",
    "membership",
    "mobius_normalize",
    "pythagorean_mate",
    "rank_one_identity_check",
    "resolve_seed",
    "subspace_distance",
    "__version__",
]
