"""Deterministic constructors for the example families used as fixtures:
Hamming cubes and their subsets, the Walsh system on dyadic atoms, the
named counterexample configurations, and the uniform (ultrametric-style)
distance matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .errors import ParameterError
from .spaces import ONE, ZERO, AtomicMeasure, DistanceMatrix, FunctionSet

MAX_CUBE_DIMENSION = 16
MAX_WALSH_LEVEL = 8

# Knuth's MMIX linear congruential generator.  Seeded subset selection uses
# it instead of the stdlib RNG so fixtures reproduce byte for byte on any
# platform: state' = (state * 6364136223846793005 + 1442695040888963407)
# mod 2^64, and each draw takes the top 31 bits (state' >> 33).
_LCG_MULTIPLIER = 6364136223846793005
_LCG_INCREMENT = 1442695040888963407
_LCG_MODULUS = 1 << 64


def _lcg_stream(seed: int) -> Iterator[int]:
    state = seed % _LCG_MODULUS
    while True:
        state = (state * _LCG_MULTIPLIER + _LCG_INCREMENT) % _LCG_MODULUS
        yield state >> 33


def hamming_cube(n: int) -> FunctionSet:
    """All 2^n vertices of {0, 1}^n in lexicographic order, counting measure."""
    if not 1 <= n <= MAX_CUBE_DIMENSION:
        raise ParameterError(
            f"cube dimension must be in 1..{MAX_CUBE_DIMENSION}, got {n!r}")
    labels = []
    rows = []
    for code in range(2 ** n):
        bits = format(code, f"0{n}b")
        labels.append("v" + bits)
        rows.append(tuple(ONE if bit == "1" else ZERO for bit in bits))
    return FunctionSet(AtomicMeasure.counting(n), tuple(labels), tuple(rows))


def cube_subset(n: int, size: int, seed: int = 0) -> FunctionSet:
    """A reproducible subset of cube vertices, chosen by the documented LCG
    via a partial Fisher-Yates shuffle and returned in vertex order."""
    if not 1 <= n <= MAX_CUBE_DIMENSION:
        raise ParameterError(
            f"cube dimension must be in 1..{MAX_CUBE_DIMENSION}, got {n!r}")
    total = 2 ** n
    if not 1 <= size <= total:
        raise ParameterError(f"subset size must be in 1..{total}, got {size!r}")
    stream = _lcg_stream(seed)
    indices = list(range(total))
    for i in range(size):
        j = i + next(stream) % (total - i)
        indices[i], indices[j] = indices[j], indices[i]
    chosen = sorted(indices[:size])
    cube = hamming_cube(n)
    return FunctionSet(
        cube.measure,
        tuple(cube.labels[i] for i in chosen),
        tuple(cube.values[i] for i in chosen),
    )


def walsh_system(m: int) -> FunctionSet:
    """The first 2^m Walsh functions in Paley (Hadamard) order, discretized
    exactly on 2^m dyadic atoms of weight 2^-m.

    Row r takes the value (-1)^popcount(r AND c) on atom c: the rows of the
    Sylvester-Hadamard matrix, i.e. the tensor powers of [[1, 1], [1, -1]].
    The functions are constant on dyadic intervals of length 2^-m, so this
    discretization is lossless.  Rows are exactly orthonormal under the
    weighted inner product.
    """
    if not 0 <= m <= MAX_WALSH_LEVEL:
        raise ParameterError(f"walsh level must be in 0..{MAX_WALSH_LEVEL}, got {m!r}")
    size = 2 ** m
    weight = Fraction(1, size)
    rows = tuple(
        tuple(ONE if (r & c).bit_count() % 2 == 0 else -ONE for c in range(size))
        for r in range(size))
    labels = tuple(f"w{r}" for r in range(size))
    return FunctionSet(AtomicMeasure((weight,) * size), labels, rows)


def remark_examples() -> dict[str, FunctionSet]:
    """The named counterexample configurations around strictness for
    families taking three or more values.

    ``Z``: four points in the plane taking values {0, 1, 2}, affinely
    dependent yet strictly negative for exponents below 2.
    ``midpoint_line``: {0, 1, 2} on the real line, whose metric midpoint
    blocks negative type beyond exponent 2.
    ``midpoint_triple``: the same obstruction embedded in the plane as
    {x, y, (x + y) / 2}.
    """
    z = FunctionSet(
        AtomicMeasure.counting(2),
        ("z0", "z1", "z2", "z3"),
        ((ZERO, ZERO), (ONE, ONE), (Fraction(2), ONE), (Fraction(2), ZERO)),
    )
    midpoint_line = FunctionSet(
        AtomicMeasure.counting(1),
        ("x0", "x1", "x2"),
        ((ZERO,), (ONE,), (Fraction(2),)),
    )
    midpoint_triple = FunctionSet(
        AtomicMeasure.counting(2),
        ("x", "y", "z"),
        ((ZERO, ZERO), (Fraction(2), ZERO), (ONE, ZERO)),
    )
    return {"Z": z, "midpoint_line": midpoint_line, "midpoint_triple": midpoint_triple}


def uniform_space(k: int) -> DistanceMatrix:
    """k points with every powered pairwise distance equal to 1, for any
    exponent (the discrete picture of a two-valued family under the
    supremum metric, which is ultrametric)."""
    if not isinstance(k, int) or k < 2:
        raise ParameterError(f"uniform space needs k >= 2 points, got {k!r}")
    entries = tuple(
        tuple(ZERO if i == j else ONE for j in range(k)) for i in range(k))
    labels = tuple(f"u{i}" for i in range(k))
    return DistanceMatrix(p=1.0, entries=entries, labels=labels,
                          exact=True, p_independent=True)


FAMILIES = (
    "hamming_cube",
    "cube_subset",
    "walsh",
    "remark_Z",
    "midpoint_line",
    "uniform_space",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """A named family plus its parameters; the seed only matters for the
    seeded families and is ignored elsewhere."""

    family: str
    parameters: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None


def build(spec: GeneratorSpec) -> FunctionSet | DistanceMatrix:
    """Construct the family a GeneratorSpec names; identical specs produce
    identical objects."""
    params = dict(spec.parameters)

    def take(name: str) -> int:
        if name not in params:
            raise ParameterError(f"family {spec.family!r} needs parameter {name!r}")
        value = params.pop(name)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterError(f"parameter {name!r} must be an integer, got {value!r}")
        return value

    def done():
        if params:
            raise ParameterError(
                f"unexpected parameters for {spec.family!r}: {sorted(params)}")

    if spec.family == "hamming_cube":
        n = take("n")
        done()
        return hamming_cube(n)
    if spec.family == "cube_subset":
        n = take("n")
        size = take("size")
        done()
        return cube_subset(n, size, spec.seed if spec.seed is not None else 0)
    if spec.family == "walsh":
        m = take("m")
        done()
        return walsh_system(m)
    if spec.family == "remark_Z":
        done()
        return remark_examples()["Z"]
    if spec.family == "midpoint_line":
        done()
        return remark_examples()["midpoint_line"]
    if spec.family == "uniform_space":
        k = take("k")
        done()
        return uniform_space(k)
    raise ParameterError(
        f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")
