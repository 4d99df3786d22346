"""Certification of (strict) p-negative type by eigenvalues on the zero-sum
hyperplane, generalized-roundness bisection, and a randomized simplex-gap
cross-checker against the paper-level equivalence gap >= 0 <=> negative type.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import (
    ConsistencyError,
    DuplicatePointError,
    InterfaceError,
    ParameterError,
)
from .simplexes import Simplex, is_degenerate, simplex_gap
from .spaces import DistanceMatrix, FunctionSet, check_exponent, powered_distance_matrix

EIGEN_TOLERANCE_SCALE = 1e-9
LOW_EXPONENT_FLOOR = 1e-4
DEFAULT_CAP = 64.0


def zero_sum_basis(n: int) -> np.ndarray:
    """Orthonormal basis of the hyperplane {sum of coordinates = 0}, as the
    columns of an n x (n-1) matrix.

    Helmert construction, fixed for reproducibility: column k has k leading
    entries 1, then -k, then zeros, normalized by sqrt(k(k+1)).
    """
    if n < 2:
        raise ParameterError(f"zero-sum hyperplane needs order >= 2, got {n}")
    basis = np.zeros((n, n - 1))
    for k in range(1, n):
        basis[:k, k - 1] = 1.0
        basis[k, k - 1] = -float(k)
        basis[:, k - 1] /= math.sqrt(k * (k + 1))
    return basis


@dataclass(frozen=True)
class NegTypeVerdict:
    """Outcome of one negative-type eigenvalue test.

    ``holds`` means the quadratic form is <= 0 on the zero-sum hyperplane up
    to the tolerance; ``strict`` that it is bounded away from zero there.
    A verdict within the tolerance band is reported as the boundary case
    (holds, not strict).  The extremal vector is present exactly when the
    property fails, and then it sums to zero and violates the inequality.
    """

    p: float
    holds: bool
    strict: bool
    min_reduced_eigenvalue: float
    max_reduced_eigenvalue: float
    tolerance: float
    extremal_vector: tuple[float, ...] | None = None

    def to_dict(self) -> dict:
        doc = {
            "p": self.p,
            "holds": self.holds,
            "strict": self.strict,
            "min_reduced_eigenvalue": self.min_reduced_eigenvalue,
            "max_reduced_eigenvalue": self.max_reduced_eigenvalue,
            "tolerance": self.tolerance,
        }
        if self.extremal_vector is not None:
            doc["extremal_vector"] = list(self.extremal_vector)
        return doc


def negative_type_check(matrix: DistanceMatrix,
                        strictness_requested: bool = False) -> NegTypeVerdict:
    """Decide whether the powered distance matrix has (strict) negative type.

    Restricts the quadratic form to the zero-sum hyperplane via the Helmert
    basis and inspects the largest eigenvalue of the reduced matrix against
    a tolerance of 1e-9 * (1 + max |entry|).  On failure the top reduced
    eigenvector is lifted back to a zero-sum witness.
    """
    n = matrix.order
    if n < 2:
        raise ParameterError("negative type needs at least two points")
    arr = np.array([[float(x) for x in row] for row in matrix.entries])
    if strictness_requested:
        off_diagonal_zero = (arr == 0.0) & ~np.eye(n, dtype=bool)
        if off_diagonal_zero.any():
            i, j = map(int, np.argwhere(off_diagonal_zero)[0])
            raise DuplicatePointError(
                f"strictness requires pairwise distinct points; "
                f"d({matrix.labels[i]}, {matrix.labels[j]})^p = 0")
    tolerance = EIGEN_TOLERANCE_SCALE * (1.0 + float(np.max(np.abs(arr))))
    basis = zero_sum_basis(n)
    reduced = basis.T @ arr @ basis
    reduced = (reduced + reduced.T) / 2.0
    eigenvalues, eigenvectors = np.linalg.eigh(reduced)
    max_eig = float(eigenvalues[-1])
    min_eig = float(eigenvalues[0])
    holds = max_eig <= tolerance
    strict = max_eig <= -tolerance
    extremal = None
    if not holds:
        zeta = basis @ eigenvectors[:, -1]
        zeta = zeta - zeta.mean()
        extremal = tuple(float(x) for x in zeta)
    return NegTypeVerdict(
        p=matrix.p,
        holds=holds,
        strict=strict,
        min_reduced_eigenvalue=min_eig,
        max_reduced_eigenvalue=max_eig,
        tolerance=tolerance,
        extremal_vector=extremal,
    )


@dataclass(frozen=True)
class RoundnessResult:
    """Bracket [lower, upper] around the generalized roundness.

    ``exceeded_cap`` reports that negative type still holds at the probing
    cap, in which case lower = upper = cap and no claim is made beyond it.
    The trace lists every probed exponent with its verdict, in probe order.
    """

    lower: float
    upper: float
    exceeded_cap: bool
    cap: float
    trace: tuple[tuple[float, bool], ...] = ()

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exceeded_cap": self.exceeded_cap,
            "cap": self.cap,
            "trace": [{"p": p, "holds": holds} for p, holds in self.trace],
        }


def _roundness_probe(source, metric_p) -> Callable[[float], DistanceMatrix]:
    if isinstance(source, FunctionSet):
        if source.distinct_point_count() < 2:
            raise ParameterError("roundness needs at least two distinct points")
        r = check_exponent(metric_p)
        base = powered_distance_matrix(source, r)
        base_float = np.array([[float(x) for x in row] for row in base.entries])
        labels = source.labels

        def probe(q: float) -> DistanceMatrix:
            if q == r:
                return base
            powered = base_float ** (q / r)
            entries = tuple(tuple(float(x) for x in row) for row in powered)
            return DistanceMatrix(p=float(q), entries=entries, labels=labels,
                                  exact=False, source=source)

        return probe
    if isinstance(source, DistanceMatrix):
        if source.p_independent:
            return lambda q: source
        raise InterfaceError(
            "a fixed-exponent distance matrix cannot be re-powered; supply "
            "coordinates or a p-independent matrix")
    raise InterfaceError(
        f"unsupported roundness source {type(source).__name__}")


def _check_trace_monotone(trace: list[tuple[float, bool]]) -> None:
    # Negative type over p is an interval reaching down to 0; a failure
    # below a success would contradict that and invalidate the bisection.
    failures = [p for p, holds in trace if not holds]
    successes = [p for p, holds in trace if holds]
    if failures and successes and min(failures) < max(successes):
        raise ConsistencyError(
            f"negative type failed at p={min(failures)} but held at "
            f"p={max(successes)}; the probed family is not an interval")


def generalized_roundness(source,
                          tolerance: float = 1e-6,
                          cap: float = DEFAULT_CAP,
                          metric_p=1,
                          ) -> RoundnessResult:
    """Bracket the supremum of exponents at which negative type holds.

    ``source`` is a point family (probed at q by re-powering the fixed
    metric d_{metric_p}: entries (d^metric_p)^(q/metric_p)) or a
    p-independent distance matrix.  Bisection starts from an exponent that
    holds (1, halved down to a floor of 1e-4 if necessary) and from the cap;
    if the cap itself holds, the result reports exceeded_cap instead of a
    bracket.  If no exponent down to the floor holds, the bracket degrades
    to [0, smallest failing probe].
    """
    if not tolerance > 0:
        raise ParameterError(f"tolerance must be positive, got {tolerance!r}")
    if not cap > 0:
        raise ParameterError(f"cap must be positive, got {cap!r}")
    probe = _roundness_probe(source, metric_p)
    trace: list[tuple[float, bool]] = []

    def holds_at(q: float) -> bool:
        verdict = negative_type_check(probe(q))
        trace.append((q, verdict.holds))
        return verdict.holds

    p_lo = min(1.0, float(cap))
    while not holds_at(p_lo):
        p_lo /= 2.0
        if p_lo < LOW_EXPONENT_FLOOR:
            _check_trace_monotone(trace)
            return RoundnessResult(0.0, 2.0 * p_lo, False, float(cap), tuple(trace))
    if holds_at(float(cap)):
        _check_trace_monotone(trace)
        return RoundnessResult(float(cap), float(cap), True, float(cap), tuple(trace))
    lo, hi = p_lo, float(cap)
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if holds_at(mid):
            lo = mid
        else:
            hi = mid
    _check_trace_monotone(trace)
    return RoundnessResult(lo, hi, False, float(cap), tuple(trace))


@dataclass(frozen=True)
class SamplerReport:
    """Counts and extremes from a randomized simplex-gap cross-check."""

    p: float
    trials: int
    seed: int
    holds: bool
    strict: bool
    degenerate_count: int
    nondegenerate_count: int
    min_gap: float
    min_nondegenerate_gap: float | None
    zero_gap_nondegenerate_found: bool
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "holds": self.holds,
            "strict": self.strict,
            "degenerate_count": self.degenerate_count,
            "nondegenerate_count": self.nondegenerate_count,
            "min_gap": self.min_gap,
            "min_nondegenerate_gap": self.min_nondegenerate_gap,
            "zero_gap_nondegenerate_found": self.zero_gap_nondegenerate_found,
            "tolerance": self.tolerance,
        }


def _random_simplex(rng: random.Random, family: FunctionSet) -> Simplex:
    n = len(family)
    s = rng.randint(1, 4)
    t = rng.randint(1, 4)
    left = [(rng.randrange(n), Fraction(rng.randint(-5, 5))) for _ in range(s)]
    right = [(rng.randrange(n), Fraction(rng.randint(-5, 5))) for _ in range(t - 1)]
    balance = (sum((w for _, w in left), Fraction(0))
               - sum((w for _, w in right), Fraction(0)))
    right.append((rng.randrange(n), balance))
    return Simplex(family, tuple(left), tuple(right))


def gap_sampler_crosscheck(family: FunctionSet,
                           p,
                           trials: int,
                           seed: int,
                           witness: Simplex | None = None) -> SamplerReport:
    """Sample random simplices (sizes up to 4, integer weights in [-5, 5]
    with the last weight adjusted to equal sums) and check every gap against
    the eigenvalue verdict.

    Raises ConsistencyError if any sampled gap contradicts the verdict:
    a gap below -tolerance while the property holds, or a non-positive
    non-degenerate gap while it is strict.  An optional witness simplex is
    injected as the first sample.  Deterministic for a fixed seed.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials!r}")
    p_float = check_exponent(p)
    distances = powered_distance_matrix(family, p)
    verdict = negative_type_check(distances)
    rng = random.Random(seed)
    tolerance = verdict.tolerance
    degenerate_count = 0
    nondegenerate_count = 0
    min_gap: float | None = None
    min_nondeg_gap: float | None = None
    found_zero = False
    for trial in range(trials):
        if trial == 0 and witness is not None:
            if witness.point_set != family:
                raise ConsistencyError("witness simplex references a different family")
            simplex = witness
        else:
            simplex = _random_simplex(rng, family)
        gap = simplex_gap(simplex, p, distances)
        gap_float = float(gap)
        exact = isinstance(gap, Fraction)
        degenerate = is_degenerate(simplex)
        if degenerate:
            degenerate_count += 1
        else:
            nondegenerate_count += 1
            if min_nondeg_gap is None or gap_float < min_nondeg_gap:
                min_nondeg_gap = gap_float
            if abs(gap_float) <= tolerance:
                found_zero = True
        if min_gap is None or gap_float < min_gap:
            min_gap = gap_float
        if verdict.holds and gap_float < -tolerance:
            raise ConsistencyError(
                f"sampled gap {gap_float} contradicts the non-negative verdict "
                f"at p={p_float}")
        if verdict.strict and not degenerate:
            positive = gap > 0 if exact else gap_float > -tolerance
            if not positive:
                raise ConsistencyError(
                    f"sampled non-degenerate gap {gap_float} contradicts the "
                    f"strict verdict at p={p_float}")
    return SamplerReport(
        p=p_float,
        trials=trials,
        seed=seed,
        holds=verdict.holds,
        strict=verdict.strict,
        degenerate_count=degenerate_count,
        nondegenerate_count=nondegenerate_count,
        min_gap=min_gap if min_gap is not None else 0.0,
        min_nondegenerate_gap=min_nondeg_gap,
        zero_gap_nondegenerate_found=found_zero,
        tolerance=tolerance,
    )
