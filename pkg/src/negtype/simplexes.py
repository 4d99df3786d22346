"""Signed simplices over a point family: repeating numbers, degeneracy,
balance, virtual degeneracy, the p-simplex gap, compression to the line,
and the exact gap identities for two-valued and {0, beta}-valued families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, SimplexError, ValueClassError
from .spaces import (
    ONE,
    ZERO,
    DistanceMatrix,
    FunctionSet,
    Row,
    check_exponent,
    integer_exponent,
    powered_distance_matrix,
)

WeightedIndex = tuple[int, Fraction]


@dataclass(frozen=True)
class Simplex:
    """A signed (s, t)-simplex: two weighted lists of point references whose
    weight totals agree exactly.

    Weights may be any rationals (including zero or negative); points may
    repeat within and across the two halves.
    """

    point_set: FunctionSet
    left: tuple[WeightedIndex, ...]
    right: tuple[WeightedIndex, ...]

    def __post_init__(self):
        left = tuple((int(i), Fraction(w)) for i, w in self.left)
        right = tuple((int(i), Fraction(w)) for i, w in self.right)
        if not left or not right:
            raise SimplexError("both halves of a simplex must be non-empty")
        n = len(self.point_set)
        for i, _ in (*left, *right):
            if not 0 <= i < n:
                raise SimplexError(f"point index {i} outside the family of {n} points")
        lsum = sum((w for _, w in left), ZERO)
        rsum = sum((w for _, w in right), ZERO)
        if lsum != rsum:
            raise SimplexError(
                f"weight sums must agree: left total {lsum}, right total {rsum}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def left_total(self) -> Fraction:
        return sum((w for _, w in self.left), ZERO)

    @property
    def right_total(self) -> Fraction:
        return sum((w for _, w in self.right), ZERO)


def repeating_numbers(simplex: Simplex) -> dict[Row, tuple[Fraction, Fraction]]:
    """Aggregate weight of every distinct point value on each half.

    Keys are the distinct rows appearing in the simplex, grouped by exact
    value equality, in order of first appearance (left half first).
    """
    values = simplex.point_set.values
    table: dict[Row, list[Fraction]] = {}
    for idx, w in simplex.left:
        table.setdefault(values[idx], [ZERO, ZERO])[0] += w
    for idx, w in simplex.right:
        table.setdefault(values[idx], [ZERO, ZERO])[1] += w
    return {z: (m, n) for z, (m, n) in table.items()}


def is_degenerate(simplex: Simplex) -> bool:
    """True iff every distinct point is equally represented in both halves."""
    return all(m == n for m, n in repeating_numbers(simplex).values())


def _side_sum(family: FunctionSet, side: tuple[WeightedIndex, ...]) -> Row:
    atoms = len(family.measure)
    acc = [ZERO] * atoms
    for idx, w in side:
        row = family.values[idx]
        for k in range(atoms):
            acc[k] += w * row[k]
    return tuple(acc)


def balance_defect(simplex: Simplex) -> Row:
    """Coordinatewise difference of the two weighted side sums (exact)."""
    left = _side_sum(simplex.point_set, simplex.left)
    right = _side_sum(simplex.point_set, simplex.right)
    return tuple(a - b for a, b in zip(left, right))


def is_balanced(simplex: Simplex) -> bool:
    """True iff the two halves have the same weighted vector sum."""
    return all(x == 0 for x in balance_defect(simplex))


def is_virtually_degenerate(simplex: Simplex) -> bool:
    """Non-degenerate, yet every per-atom evaluation simplex is degenerate.

    The evaluation simplex at an atom keeps the weights and replaces each
    point by its scalar value there; degeneracy groups by exact scalar
    equality.  Atoms all carry positive measure, so every atom counts.
    """
    if is_degenerate(simplex):
        return False
    family = simplex.point_set
    for k in range(len(family.measure)):
        counts: dict[Fraction, list[Fraction]] = {}
        for idx, w in simplex.left:
            counts.setdefault(family.values[idx][k], [ZERO, ZERO])[0] += w
        for idx, w in simplex.right:
            counts.setdefault(family.values[idx][k], [ZERO, ZERO])[1] += w
        if any(m != n for m, n in counts.values()):
            return False
    return True


def _check_companions(simplex: Simplex, p, distances: DistanceMatrix) -> None:
    if distances.source is None or distances.source != simplex.point_set:
        raise ConsistencyError("distance matrix was not built from this point family")
    if not distances.p_independent and float(p) != distances.p:
        raise ConsistencyError(
            f"distance matrix carries exponent {distances.p}, gap requested at {float(p)}")


def simplex_gap(simplex: Simplex, p, distances: DistanceMatrix) -> Fraction | float:
    """The p-simplex gap: the cross-half weighted distance mass minus both
    within-half masses; empty index ranges contribute zero.

    Exact (a Fraction) whenever the matrix entries are exact.
    """
    check_exponent(p)
    _check_companions(simplex, p, distances)
    e = distances.entries
    left, right = simplex.left, simplex.right
    total: Fraction | float = ZERO
    for xj, mj in left:
        for yi, ni in right:
            total += mj * ni * e[xj][yi]
    for a in range(len(left)):
        xa, ma = left[a]
        for b in range(a + 1, len(left)):
            xb, mb = left[b]
            total -= ma * mb * e[xa][xb]
    for a in range(len(right)):
        ya, na = right[a]
        for b in range(a + 1, len(right)):
            yb, nb = right[b]
            total -= na * nb * e[ya][yb]
    return total


def compress_two_valued(simplex: Simplex) -> Simplex:
    """Collapse a two-valued line simplex onto the canonical pair {0, 1}.

    The four weights of the result are the repeating numbers of 0 and 1 in
    the original simplex, so the p-gap is preserved exactly for every p.
    On the real line (unit atom weight) the compressed gap is the square
    (m*_2 - n*_2)^2; a single atom of weight w scales that square by w.
    """
    family = simplex.point_set
    if len(family.measure) != 1:
        raise ValueClassError("compression needs a single-atom point family")
    if not family.value_class.is_two_valued:
        raise ValueClassError("compression needs values in {0, 1}")
    numbers = repeating_numbers(simplex)
    m0, n0 = numbers.get((ZERO,), (ZERO, ZERO))
    m1, n1 = numbers.get((ONE,), (ZERO, ZERO))
    line = FunctionSet(family.measure, ("c0", "c1"), ((ZERO,), (ONE,)))
    return Simplex(line, ((0, m0), (1, m1)), ((0, n0), (1, n1)))


@dataclass(frozen=True)
class GapIdentity:
    """Both sides of a gap identity and whether they agreed.

    ``exact`` records that the comparison was exact rational equality;
    otherwise it was floating at 1e-10 relative.
    """

    gap: Fraction | float
    rhs: Fraction | float
    equal: bool
    exact: bool


def _weighted_defect_square(simplex: Simplex) -> Fraction:
    family = simplex.point_set
    defect = balance_defect(simplex)
    return sum((w * d * d for w, d in zip(family.measure.weights, defect)), ZERO)


def two_valued_gap_identity(simplex: Simplex, p) -> GapIdentity:
    """Evaluate both sides of `gap = squared weighted L2 norm of the side
    difference` for a two-valued simplex, exactly.

    The left side goes through the powered distance matrix (p-free
    rationals for two-valued families), the right side through the
    coordinates; the two routes share no code path beyond the weights.
    """
    family = simplex.point_set
    if not family.value_class.is_two_valued:
        raise ValueClassError(
            f"identity needs a two-valued family, got {family.value_class.kind!r}")
    gap = simplex_gap(simplex, p, powered_distance_matrix(family, p))
    rhs = _weighted_defect_square(simplex)
    return GapIdentity(gap, rhs, gap == rhs, True)


def alpha_beta_gap_identity(simplex: Simplex, p) -> GapIdentity:
    """The scaled identity for {0, beta}-valued simplices:
    gap = |beta|^(p-2) * squared weighted L2 norm of the side difference.

    Exact comparison when |beta|^(p-2) is rational (integer p, or
    |beta| = 1); floating comparison at 1e-10 relative otherwise.
    Translate {alpha, beta}-valued families to alpha = 0 first.
    """
    family = simplex.point_set
    vc = family.value_class
    if vc.is_two_valued:
        beta = ONE
    elif vc.is_alpha_beta and vc.alpha == 0:
        beta = vc.beta
    else:
        raise ValueClassError(
            "identity needs a {0, beta}-valued family; apply translate_to_zero_beta first")
    p_float = check_exponent(p)
    p_int = integer_exponent(p)
    gap = simplex_gap(simplex, p, powered_distance_matrix(family, p))
    l2 = _weighted_defect_square(simplex)
    magnitude = abs(beta)
    factor: Fraction | float
    if p_int is not None:
        factor = magnitude ** (p_int - 2)
    elif magnitude == 1:
        factor = ONE
    else:
        factor = float(magnitude) ** (p_float - 2.0)
    rhs = factor * l2
    if isinstance(gap, Fraction) and isinstance(rhs, Fraction):
        return GapIdentity(gap, rhs, gap == rhs, True)
    g, r = float(gap), float(rhs)
    equal = abs(g - r) <= 1e-10 * max(1.0, abs(g), abs(r))
    return GapIdentity(gap, rhs, equal, False)
