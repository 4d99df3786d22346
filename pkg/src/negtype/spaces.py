"""Finite atomic measure spaces and families of rational-valued functions,
with their powered L_p distance matrices.

Coordinates, atom weights, and simplex weights stay exact rationals; a
float appears only where the exponent enters transcendentally, i.e. in
``|x - y| ** p`` for a non-integer p on a non-unit difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import MatrixError, ParameterError, ShapeError, ValueClassError

ZERO = Fraction(0)
ONE = Fraction(1)

Row = tuple[Fraction, ...]


def integer_exponent(p) -> int | None:
    """The exponent as an int when it is one exactly, else None."""
    if isinstance(p, bool):
        return None
    if isinstance(p, int):
        return p
    if isinstance(p, Fraction):
        return p.numerator if p.denominator == 1 else None
    if isinstance(p, float) and p.is_integer():
        return int(p)
    return None


def check_exponent(p) -> float:
    try:
        value = float(p)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"exponent must be a positive real, got {p!r}") from exc
    if math.isnan(value) or not value > 0:
        raise ParameterError(f"exponent must be positive, got {p!r}")
    return value


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely many atoms with strictly positive rational weights."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        if not weights:
            raise ShapeError("a measure needs at least one atom")
        for k, w in enumerate(weights):
            if w <= 0:
                raise ParameterError(f"atom {k} has non-positive weight {w}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def counting(cls, atoms: int) -> "AtomicMeasure":
        """Counting measure: the given number of atoms, each of weight 1."""
        return cls(tuple([ONE] * atoms))

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, ZERO)


@dataclass(frozen=True)
class ValueClass:
    """Which values a function family takes: arbitrary rationals, {0, 1},
    or exactly two values {alpha, beta}."""

    kind: str
    alpha: Fraction | None = None
    beta: Fraction | None = None

    @property
    def is_two_valued(self) -> bool:
        return self.kind == "two_valued"

    @property
    def is_alpha_beta(self) -> bool:
        return self.kind == "alpha_beta"


GENERAL = ValueClass("general")
TWO_VALUED = ValueClass("two_valued")


def alpha_beta(alpha, beta) -> ValueClass:
    a, b = Fraction(alpha), Fraction(beta)
    if a == b:
        raise ValueClassError("alpha and beta must differ")
    return ValueClass("alpha_beta", a, b)


def _classify(rows) -> ValueClass:
    distinct: set[Fraction] = set()
    for row in rows:
        distinct.update(row)
    if distinct <= {ZERO, ONE}:
        return TWO_VALUED
    if len(distinct) == 2:
        lo, hi = sorted(distinct)
        return alpha_beta(lo, hi)
    return GENERAL


@dataclass(frozen=True)
class FunctionSet:
    """An indexed family of points, each a rational vector over the atoms.

    Duplicate rows are allowed (simplices may repeat points); label
    uniqueness is what identifies entries in serialized form.  The value
    class is derived at construction and never set by hand.
    """

    measure: AtomicMeasure
    labels: tuple[str, ...]
    values: tuple[Row, ...]
    value_class: ValueClass = field(init=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.values)
        if not rows:
            raise ShapeError("a point family needs at least one point")
        if len(labels) != len(rows):
            raise ShapeError(f"{len(labels)} labels for {len(rows)} points")
        if len(set(labels)) != len(labels):
            raise ShapeError("point labels must be unique")
        atoms = len(self.measure)
        for label, row in zip(labels, rows):
            if len(row) != atoms:
                raise ShapeError(
                    f"point {label!r} has {len(row)} coordinates, expected {atoms}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", rows)
        object.__setattr__(self, "value_class", _classify(rows))

    def __len__(self) -> int:
        return len(self.values)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ShapeError(f"no point labelled {label!r}") from None

    def distinct_point_count(self) -> int:
        return len(set(self.values))


def classify_values(family: FunctionSet) -> ValueClass:
    """Recompute the value class of a family from its entries."""
    return _classify(family.values)


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of pairwise distances already raised to an exponent.

    Entries are exact Fractions whenever the power could be taken exactly
    and floats otherwise; ``p_independent`` records that the entries do not
    change with the exponent (all coordinate differences lie in {0, 1}).
    """

    p: float
    entries: tuple[tuple[Fraction | float, ...], ...]
    labels: tuple[str, ...]
    exact: bool
    p_independent: bool = False
    source: FunctionSet | None = None

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        n = len(entries)
        if n == 0:
            raise MatrixError("distance matrix must be non-empty")
        if len(self.labels) != n:
            raise MatrixError(f"{len(self.labels)} labels for order {n}")
        for i, row in enumerate(entries):
            if len(row) != n:
                raise MatrixError(f"row {i} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                value = float(x)
                if math.isnan(value) or math.isinf(value):
                    raise MatrixError(f"non-finite entry at [{i}][{j}]")
                if value < 0:
                    raise MatrixError(f"negative entry {x!r} at [{i}][{j}]")
            if row[i] != 0:
                raise MatrixError(f"diagonal entry [{i}][{i}] = {row[i]!r}, expected 0")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise MatrixError(
                        f"asymmetric entries: [{i}][{j}]={entries[i][j]!r}, "
                        f"[{j}][{i}]={entries[j][i]!r}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "p", float(self.p))

    @property
    def order(self) -> int:
        return len(self.entries)

    @property
    def powered(self) -> bool:
        """This artifact only ever carries d^p, never d itself."""
        return True


def powered_distance_matrix(family: FunctionSet, p) -> DistanceMatrix:
    """d(x, y)^p = sum_k w_k |x_k - y_k|^p over all point pairs.

    Entries stay exact Fractions when p is a positive integer or when every
    coordinate difference of the pair lies in {0, 1} (two-valued families;
    there the entry is the measure of the support symmetric difference and
    does not depend on p at all).
    """
    p_float = check_exponent(p)
    p_int = integer_exponent(p)
    n = len(family)
    weights = family.measure.weights
    entries: list[list[Fraction | float]] = [[ZERO] * n for _ in range(n)]
    all_exact = True
    all_unit = True
    for i in range(n):
        row_i = family.values[i]
        for j in range(i + 1, n):
            row_j = family.values[j]
            diffs = [abs(a - b) for a, b in zip(row_i, row_j)]
            unit = all(d == 0 or d == 1 for d in diffs)
            if not unit:
                all_unit = False
            value: Fraction | float
            if unit:
                value = sum((w for w, d in zip(weights, diffs) if d != 0), ZERO)
            elif p_int is not None:
                value = sum((w * d ** p_int for w, d in zip(weights, diffs) if d != 0),
                            ZERO)
            else:
                value = float(sum(float(w) * float(d) ** p_float
                                  for w, d in zip(weights, diffs) if d != 0))
                all_exact = False
            entries[i][j] = value
            entries[j][i] = value
    return DistanceMatrix(
        p=p_float,
        entries=tuple(tuple(row) for row in entries),
        labels=family.labels,
        exact=all_exact,
        p_independent=all_unit,
        source=family,
    )


def translate_to_zero_beta(family: FunctionSet) -> FunctionSet:
    """Shift an {alpha, beta}-valued family so its lower value becomes 0.

    A pure translation: every powered distance matrix of the result equals
    that of the input entry for entry.  {0, 1}-valued families pass through
    unchanged.
    """
    vc = family.value_class
    if vc.is_two_valued:
        return family
    if not vc.is_alpha_beta:
        raise ValueClassError(
            f"translation needs a two-valued or alpha/beta family, got {vc.kind!r}")
    shift = vc.alpha
    rows = tuple(tuple(x - shift for x in row) for row in family.values)
    return FunctionSet(family.measure, family.labels, rows)
