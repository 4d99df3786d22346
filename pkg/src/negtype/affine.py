"""Affine (in)dependence certificates and the constructive bridge between
rational dependencies and non-degenerate balanced simplices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateError, ConsistencyError, PreconditionError
from .numerics import rational_nullspace_vector, rational_rank
from .simplexes import Simplex, is_balanced, is_degenerate, repeating_numbers
from .spaces import ONE, ZERO, FunctionSet, Row


@dataclass(frozen=True)
class AffineCertificate:
    """Machine-checkable affine-independence evidence.

    Dependent families carry an exact dependency (coefficients sum to zero,
    annihilate the weighted point sum, and are not all zero) and, whenever
    the involved points are distinct, a balanced non-degenerate witness
    simplex built from it.
    """

    independent: bool
    dependency: tuple[Fraction, ...] | None = None
    witness_simplex: Simplex | None = None

    @property
    def verdict(self) -> str:
        return "independent" if self.independent else "dependent"


def affine_independence(family: FunctionSet) -> AffineCertificate:
    """Exact affine-independence verdict for the family of points.

    Independence is decided by the rank of the difference vectors from the
    first point; the dependency of a dependent family comes from the exact
    nullspace of the homogenized coordinate matrix.
    """
    k = len(family)
    if k == 1:
        return AffineCertificate(True)
    atoms = len(family.measure)
    base = family.values[0]
    diffs = [[family.values[i][c] - base[c] for c in range(atoms)]
             for i in range(1, k)]
    if rational_rank(diffs) == k - 1:
        return AffineCertificate(True)
    homogeneous = [[family.values[i][c] for i in range(k)] for c in range(atoms)]
    homogeneous.append([ONE] * k)
    kernel = rational_nullspace_vector(homogeneous)
    if kernel is None:
        raise ConsistencyError("rank reported a dependency but the kernel is empty")
    dependency = tuple(kernel)
    try:
        witness = balanced_simplex_from_dependency(family, dependency)
    except CertificateError:
        # Dependency supported on coinciding rows: no non-degenerate
        # witness exists, the certificate ships without one.
        witness = None
    return AffineCertificate(False, dependency, witness)


def balanced_simplex_from_dependency(family: FunctionSet, coefficients) -> Simplex:
    """Build the balanced simplex of an affine dependency: positive
    coefficients weight the left half, negated negative ones the right;
    zero coefficients drop their point.
    """
    lam = tuple(Fraction(c) for c in coefficients)
    if len(lam) != len(family):
        raise CertificateError(
            f"{len(lam)} coefficients for a family of {len(family)} points")
    if all(c == 0 for c in lam):
        raise CertificateError("dependency must not be identically zero")
    if sum(lam, ZERO) != 0:
        raise CertificateError(f"coefficients must sum to zero, got {sum(lam, ZERO)}")
    for k in range(len(family.measure)):
        residual = sum((c * family.values[i][k] for i, c in enumerate(lam)), ZERO)
        if residual != 0:
            raise CertificateError(
                f"coefficients do not annihilate the points (coordinate {k} "
                f"leaves {residual})")
    left = tuple((i, c) for i, c in enumerate(lam) if c > 0)
    right = tuple((i, -c) for i, c in enumerate(lam) if c < 0)
    simplex = Simplex(family, left, right)
    if is_degenerate(simplex):
        raise CertificateError(
            "dependency is supported on coinciding points and yields only a "
            "degenerate simplex")
    return simplex


def dependency_from_balanced_simplex(simplex: Simplex) -> tuple[Fraction, ...]:
    """Recover an affine dependency from a non-degenerate balanced simplex.

    Coefficient m(z) - n(z) of each distinct value z is placed at the
    lowest family index carrying that value; the result sums to zero,
    annihilates the weighted point sum, and is nonzero.
    """
    if is_degenerate(simplex):
        raise PreconditionError("degenerate simplex carries no dependency")
    if not is_balanced(simplex):
        raise PreconditionError("simplex is not balanced")
    family = simplex.point_set
    canonical: dict[Row, int] = {}
    for i, row in enumerate(family.values):
        canonical.setdefault(row, i)
    lam = [ZERO] * len(family)
    for z, (m, n) in repeating_numbers(simplex).items():
        lam[canonical[z]] += m - n
    return tuple(lam)
