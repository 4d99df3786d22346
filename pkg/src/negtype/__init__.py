"""Negative-type geometry of finite subsets of weighted atomic Lp spaces:
exact simplex-gap identities, affine certificates, eigenvalue certification
of (strict) negative type, and generalized-roundness brackets.
"""

from .affine import (
    AffineCertificate,
    affine_independence,
    balanced_simplex_from_dependency,
    dependency_from_balanced_simplex,
)
from .engine import (
    NegTypeVerdict,
    RoundnessResult,
    SamplerReport,
    gap_sampler_crosscheck,
    generalized_roundness,
    negative_type_check,
    zero_sum_basis,
)
from .errors import (
    CertificateError,
    ConsistencyError,
    DuplicatePointError,
    FormatError,
    InterfaceError,
    MatrixError,
    NegTypeError,
    NumericError,
    ParameterError,
    PreconditionError,
    ShapeError,
    SimplexError,
    ValueClassError,
)
from .generators import (
    GeneratorSpec,
    build,
    cube_subset,
    hamming_cube,
    remark_examples,
    uniform_space,
    walsh_system,
)
from .numerics import (
    Rational,
    SymmetricMatrix,
    rational_nullspace_vector,
    rational_rank,
    symmetric_eigenvalues,
)
from .simplexes import (
    GapIdentity,
    Simplex,
    alpha_beta_gap_identity,
    balance_defect,
    compress_two_valued,
    is_balanced,
    is_degenerate,
    is_virtually_degenerate,
    repeating_numbers,
    simplex_gap,
    two_valued_gap_identity,
)
from .spaces import (
    AtomicMeasure,
    DistanceMatrix,
    FunctionSet,
    ValueClass,
    classify_values,
    powered_distance_matrix,
    translate_to_zero_beta,
)

__version__ = "0.1.0"

__all__ = [
    "AffineCertificate",
    "AtomicMeasure",
    "CertificateError",
    "ConsistencyError",
    "DistanceMatrix",
    "DuplicatePointError",
    "FormatError",
    "FunctionSet",
    "GapIdentity",
    "GeneratorSpec",
    "InterfaceError",
    "MatrixError",
    "NegTypeError",
    "NegTypeVerdict",
    "NumericError",
    "ParameterError",
    "PreconditionError",
    "Rational",
    "RoundnessResult",
    "SamplerReport",
    "ShapeError",
    "Simplex",
    "SimplexError",
    "SymmetricMatrix",
    "ValueClass",
    "ValueClassError",
    "affine_independence",
    "alpha_beta_gap_identity",
    "balance_defect",
    "balanced_simplex_from_dependency",
    "build",
    "classify_values",
    "compress_two_valued",
    "cube_subset",
    "dependency_from_balanced_simplex",
    "gap_sampler_crosscheck",
    "generalized_roundness",
    "hamming_cube",
    "is_balanced",
    "is_degenerate",
    "is_virtually_degenerate",
    "negative_type_check",
    "powered_distance_matrix",
    "rational_nullspace_vector",
    "rational_rank",
    "remark_examples",
    "repeating_numbers",
    "simplex_gap",
    "symmetric_eigenvalues",
    "translate_to_zero_beta",
    "two_valued_gap_identity",
    "uniform_space",
    "walsh_system",
    "zero_sum_basis",
]
