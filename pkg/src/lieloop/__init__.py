"""Exact-arithmetic Lie theory: root systems, characters, loop-algebra
module classification, graded Ext-quivers, truncated affine characters and
Garland series."""

from .affine import (
    AffineWeight,
    TruncatedAffineSeries,
    affine_simple_roots,
    affine_weyl_ball,
    lambda0,
    level_of,
    rho_hat,
    truncated_character,
    truncated_numerator,
)
from .charring import (
    DominantDecomposition,
    FormalCharacter,
    adams_operation,
    adjoint_character,
    casimir_eigenvalue,
    char_irreducible,
    decompose_character,
    dim_irreducible,
    ext_power,
    sym_power,
    tensor_decompose,
    weyl_numerator,
)
from .errors import (
    CapExceeded,
    InvalidCartanType,
    InvalidInput,
    LieLoopError,
    NotDominant,
    NotModuleCharacter,
)
from .garland import PowerSumPoly, Sl2Rep, garland_series, newton_check, sl2_rep, zform_check
from .gradedcat import (
    GammaSet,
    GradedSimple,
    Quiver,
    build_quiver,
    covers_full,
    ext1_graded,
    ext_j_truncated,
    interval_closed_check,
    leq_psi,
    lower_set_psi,
    phi_psi,
    projective_mult,
    u_plus_graded_char,
)
from .loopcat import (
    FundamentalGroup,
    LoopIrrep,
    ext1_dim,
    hom_adjoint_mult,
    loop_splitting_order,
    same_block,
    spectral_character,
    tensor_at_point,
    weyl_quotient_count,
)
from .rootsys import CartanType, RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "AffineWeight",
    "CartanType",
    "CapExceeded",
    "DominantDecomposition",
    "FormalCharacter",
    "FundamentalGroup",
    "GammaSet",
    "GradedSimple",
    "InvalidCartanType",
    "InvalidInput",
    "LieLoopError",
    "LoopIrrep",
    "NotDominant",
    "NotModuleCharacter",
    "PowerSumPoly",
    "Quiver",
    "RootSystem",
    "Sl2Rep",
    "TruncatedAffineSeries",
    "adams_operation",
    "adjoint_character",
    "affine_simple_roots",
    "affine_weyl_ball",
    "build",
    "build_quiver",
    "casimir_eigenvalue",
    "char_irreducible",
    "covers_full",
    "decompose_character",
    "dim_irreducible",
    "ext1_dim",
    "ext1_graded",
    "ext_j_truncated",
    "ext_power",
    "garland_series",
    "hom_adjoint_mult",
    "interval_closed_check",
    "lambda0",
    "leq_psi",
    "level_of",
    "loop_splitting_order",
    "lower_set_psi",
    "newton_check",
    "phi_psi",
    "projective_mult",
    "rho_hat",
    "same_block",
    "sl2_rep",
    "spectral_character",
    "sym_power",
    "tensor_at_point",
    "tensor_decompose",
    "truncated_character",
    "truncated_numerator",
    "u_plus_graded_char",
    "weyl_numerator",
    "weyl_quotient_count",
    "zform_check",
]
