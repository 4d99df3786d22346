"""Shared helpers for the test suite: independent oracles (minor-enumeration
rank, characteristic-polynomial eigenvalues) and seeded random builders for
point families and simplices.

The oracles deliberately share no code with the production kernels.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from negtype import AtomicMeasure, FunctionSet, Simplex

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# exact determinants / rank by minor enumeration

def det_fraction(rows) -> Fraction:
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = ONE
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = ONE / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def rank_by_minors(rows) -> int:
    """Largest k with a nonzero k x k minor, by brute enumeration."""
    m, n = len(rows), len(rows[0])
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[r][c] for c in ci] for r in ri]
                if det_fraction(sub) != 0:
                    return k
    return 0


# ---------------------------------------------------------------------------
# characteristic-polynomial eigenvalue oracle

def charpoly_coefficients(rows) -> list[Fraction]:
    """Coefficients [c_0, ..., c_{n-1}, 1] of det(tI - A) via the
    Faddeev-LeVerrier recursion, exactly."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    coeffs = [ZERO] * n + [ONE]
    m = [[ZERO] * n for _ in range(n)]
    c_prev = ONE
    for k in range(1, n + 1):
        am = [[sum((a[i][l] * m[l][j] for l in range(n)), ZERO) for j in range(n)]
              for i in range(n)]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        trace = sum((sum((a[i][l] * m[l][i] for l in range(n)), ZERO)
                     for i in range(n)), ZERO)
        c_prev = -trace / k
        coeffs[n - k] = c_prev
    return coeffs


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def charpoly_roots(rows, width: float = 1e-9) -> list[float]:
    """All real roots of the characteristic polynomial of a symmetric
    matrix, isolated on a sign-change grid and bisected exactly.

    Assumes distinct eigenvalues (true with probability one for the random
    matrices the tests draw); raises if isolation keeps failing.
    """
    n = len(rows)
    coeffs = charpoly_coefficients(rows)
    bound = ONE + max(sum((abs(Fraction(x)) for x in row), ZERO) for row in rows)
    target = Fraction(width)
    grid_points = 512
    for _ in range(6):
        step = 2 * bound / grid_points
        xs = [-bound + k * step for k in range(grid_points + 1)]
        values = [_poly_eval(coeffs, x) for x in xs]
        roots: list[Fraction] = [x for x, v in zip(xs, values) if v == 0]
        brackets = [(xs[k], xs[k + 1]) for k in range(grid_points)
                    if values[k] != 0 and values[k + 1] != 0
                    and (values[k] < 0) != (values[k + 1] < 0)]
        if len(roots) + len(brackets) == n:
            for lo, hi in brackets:
                flo = _poly_eval(coeffs, lo)
                while hi - lo > target:
                    mid = (lo + hi) / 2
                    fmid = _poly_eval(coeffs, mid)
                    if fmid == 0:
                        lo = hi = mid
                        break
                    if (fmid < 0) == (flo < 0):
                        lo, flo = mid, fmid
                    else:
                        hi = mid
                roots.append((lo + hi) / 2)
            return sorted(float(r) for r in roots)
        grid_points *= 4
    raise AssertionError("could not isolate all characteristic roots")


# ---------------------------------------------------------------------------
# seeded random builders

def rand_fraction(rng: random.Random, lo: int = -5, hi: int = 5,
                  max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_two_valued_set(rng: random.Random, max_points: int = 6,
                          max_atoms: int = 8) -> FunctionSet:
    atoms = rng.randint(1, max_atoms)
    points = rng.randint(2, max_points)
    weights = tuple(Fraction(rng.randint(1, 16), rng.randint(1, 8))
                    for _ in range(atoms))
    rows = tuple(tuple(Fraction(rng.randint(0, 1)) for _ in range(atoms))
                 for _ in range(points))
    labels = tuple(f"p{i}" for i in range(points))
    return FunctionSet(AtomicMeasure(weights), labels, rows)


def random_general_set(rng: random.Random, max_points: int = 6,
                       max_atoms: int = 4) -> FunctionSet:
    atoms = rng.randint(1, max_atoms)
    points = rng.randint(2, max_points)
    weights = tuple(Fraction(rng.randint(1, 8), rng.randint(1, 4))
                    for _ in range(atoms))
    rows = tuple(tuple(rand_fraction(rng, -4, 4, 3) for _ in range(atoms))
                 for _ in range(points))
    labels = tuple(f"q{i}" for i in range(points))
    return FunctionSet(AtomicMeasure(weights), labels, rows)


def random_simplex_on(rng: random.Random, family: FunctionSet,
                      max_side: int = 4) -> Simplex:
    """Random signed simplex with rational weights in [-5, 5]; the last
    right-hand weight absorbs the equal-sum constraint."""
    n = len(family)
    s = rng.randint(1, max_side)
    t = rng.randint(1, max_side)
    left = [(rng.randrange(n), rand_fraction(rng, -5, 5, 4)) for _ in range(s)]
    right = [(rng.randrange(n), rand_fraction(rng, -5, 5, 4)) for _ in range(t - 1)]
    balance = (sum((w for _, w in left), ZERO)
               - sum((w for _, w in right), ZERO))
    right.append((rng.randrange(n), balance))
    return Simplex(family, tuple(left), tuple(right))


def degenerate_mirror_simplex(rng: random.Random, family: FunctionSet) -> Simplex:
    """Mirror a random weighted list onto both halves, reordering and
    splitting weights on the right, which forces m(z) = n(z) pointwise."""
    n = len(family)
    size = rng.randint(1, 3)
    base = [(rng.randrange(n), rand_fraction(rng, -5, 5, 4)) for _ in range(size)]
    right: list[tuple[int, Fraction]] = []
    for idx, w in base:
        split = Fraction(rng.randint(1, 3), 4)
        right.append((idx, w * split))
        right.append((idx, w * (1 - split)))
    rng.shuffle(right)
    return Simplex(family, tuple(base), tuple(right))
