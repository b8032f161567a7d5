"""Bidiagonal factorizations, recursion polynomials and Darboux transforms
of tetradiagonal lower Hessenberg matrices, in exact rational arithmetic."""

from .core import (
    AlphaSequence,
    Band,
    Classification,
    DenseMatrix,
    TetraHessenberg,
    alpha_factor_matrices,
    bands_from_alphas,
    leading_principal,
    tetra_from_alphas,
    tetra_from_bands,
    trailing_truncation,
)
from .darboux import (
    akv_sign_checks,
    alphas_from_polynomials,
    darboux_polynomials,
    darboux_transforms,
    transformed_char_polys,
    transformed_type1,
    transformed_type2,
    truncation_mismatch,
    verify_christoffel,
)
from .errors import (
    BandExhausted,
    ConsistencyViolation,
    DimensionCapExceeded,
    ExactArithmeticRequired,
    IdentityViolation,
    IndexOutOfRange,
    InexactDivision,
    NonPositiveSubSubDiagonal,
    OutsideNaturalRegion,
    PredictionMismatch,
    SignViolation,
    SingularLeadingMinor,
    SingularQuasiDetSystem,
    TetraError,
    ZeroAlpha3n,
    ZeroAlphaTwo,
    ZeroAtOrigin,
    ZeroNu,
)
from .factorization import bidiagonal_factor, gauss_borel, is_pbf, lm_from_alphas
from .families import (
    JP_VERIFICATION_GRID,
    JPParams,
    Region,
    Variant,
    jp_alphas,
    jp_cross_consistency,
    jp_dense_truncation,
    jp_matrix,
    jp_region,
    jp_sign_report,
)
from .poly import Poly, constant_poly, x_poly
from .polynomials import (
    PolyKind,
    PolySequence,
    char_poly_truncation,
    second_kind_sequences,
    type1_sequences,
    type2_sequence,
)
from .serialize import dump_alphas, dump_matrix, load_alphas, load_matrix
from .tncheck import TNReport, is_oscillatory, is_oscillatory_power_oracle, is_totally_nonnegative

__version__ = "0.1.0"

__all__ = [
    "AlphaSequence",
    "Band",
    "BandExhausted",
    "Classification",
    "ConsistencyViolation",
    "DenseMatrix",
    "DimensionCapExceeded",
    "ExactArithmeticRequired",
    "IdentityViolation",
    "IndexOutOfRange",
    "InexactDivision",
    "JPParams",
    "JP_VERIFICATION_GRID",
    "NonPositiveSubSubDiagonal",
    "OutsideNaturalRegion",
    "Poly",
    "PolyKind",
    "PolySequence",
    "PredictionMismatch",
    "Region",
    "SignViolation",
    "SingularLeadingMinor",
    "SingularQuasiDetSystem",
    "TNReport",
    "TetraError",
    "TetraHessenberg",
    "Variant",
    "ZeroAlpha3n",
    "ZeroAlphaTwo",
    "ZeroAtOrigin",
    "ZeroNu",
    "akv_sign_checks",
    "alpha_factor_matrices",
    "alphas_from_polynomials",
    "bands_from_alphas",
    "bidiagonal_factor",
    "char_poly_truncation",
    "constant_poly",
    "darboux_polynomials",
    "darboux_transforms",
    "dump_alphas",
    "dump_matrix",
    "gauss_borel",
    "is_oscillatory",
    "is_oscillatory_power_oracle",
    "is_pbf",
    "is_totally_nonnegative",
    "jp_alphas",
    "jp_cross_consistency",
    "jp_dense_truncation",
    "jp_matrix",
    "jp_region",
    "jp_sign_report",
    "leading_principal",
    "lm_from_alphas",
    "load_alphas",
    "load_matrix",
    "second_kind_sequences",
    "tetra_from_alphas",
    "tetra_from_bands",
    "trailing_truncation",
    "transformed_char_polys",
    "transformed_type1",
    "transformed_type2",
    "truncation_mismatch",
    "type1_sequences",
    "type2_sequence",
    "verify_christoffel",
    "x_poly",
]
