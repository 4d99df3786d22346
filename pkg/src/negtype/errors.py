"""Exception types shared across the package."""


class NegTypeError(Exception):
    """Base class for every error this package raises deliberately."""


class ShapeError(NegTypeError):
    """Ragged, empty, or non-square input where a proper array is required."""


class NumericError(NegTypeError):
    """Non-finite values in floating-point input."""


class ParameterError(NegTypeError):
    """Out-of-range scalar parameter (exponent, tolerance, size bound)."""


class ValueClassError(NegTypeError):
    """Operation restricted to two-valued or {alpha, beta}-valued families."""


class SimplexError(NegTypeError):
    """Violated simplex invariant, e.g. the equal-sum constraint."""


class ConsistencyError(NegTypeError):
    """Mismatched companions (wrong point family, wrong exponent) or an
    internal cross-check that contradicted itself."""


class CertificateError(NegTypeError):
    """Dependency vector that does not satisfy its advertised identities."""


class PreconditionError(NegTypeError):
    """Structural precondition not met, e.g. a degenerate simplex where a
    non-degenerate one is required."""


class MatrixError(NegTypeError):
    """Distance matrix violating symmetry, nonnegativity, or zero diagonal."""


class DuplicatePointError(MatrixError):
    """Strict certification requested for a space with coinciding points."""


class InterfaceError(NegTypeError):
    """Input kind cannot support the requested computation."""


class FormatError(NegTypeError):
    """Malformed serialized input (JSON or CSV)."""
