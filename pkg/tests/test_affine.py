import random
from fractions import Fraction

import pytest

from negtype import (
    AtomicMeasure,
    CertificateError,
    FunctionSet,
    PreconditionError,
    Simplex,
    affine_independence,
    balanced_simplex_from_dependency,
    cube_subset,
    dependency_from_balanced_simplex,
    hamming_cube,
    is_balanced,
    is_degenerate,
    negative_type_check,
    powered_distance_matrix,
    remark_examples,
    two_valued_gap_identity,
)

from support import rand_fraction, random_two_valued_set

ZERO = Fraction(0)
ONE = Fraction(1)


def proportional(u, v) -> bool:
    if len(u) != len(v):
        return False
    if any((a == 0) != (b == 0) for a, b in zip(u, v)):
        return False
    ratios = {Fraction(a) / Fraction(b) for a, b in zip(u, v) if b != 0}
    return len(ratios) == 1


def test_standard_simplex_independent():
    family = FunctionSet(AtomicMeasure.counting(2), ("o", "e1", "e2"),
                         ((0, 0), (1, 0), (0, 1)))
    cert = affine_independence(family)
    assert cert.independent
    assert cert.dependency is None and cert.witness_simplex is None


def test_single_point_vacuously_independent():
    family = FunctionSet(AtomicMeasure.counting(3), ("only",), ((1, 2, 3),))
    assert affine_independence(family).independent


def test_full_square_dependent_with_alternating_dependency():
    cube = hamming_cube(2)
    cert = affine_independence(cube)
    assert not cert.independent
    lam = cert.dependency
    # vertices in lexicographic order (0,0),(0,1),(1,0),(1,1)
    assert proportional(lam, (ONE, -ONE, -ONE, ONE))
    assert sum(lam, ZERO) == 0
    for k in range(2):
        assert sum((c * cube.values[i][k] for i, c in enumerate(lam)), ZERO) == 0


def test_remark_Z_dependent():
    assert not affine_independence(remark_examples()["Z"]).independent


def test_witness_is_balanced_and_non_degenerate():
    cert = affine_independence(hamming_cube(2))
    witness = cert.witness_simplex
    assert witness is not None
    assert is_balanced(witness)
    assert not is_degenerate(witness)


def test_witness_gap_vanishes_for_dependent_two_valued_sets():
    rng = random.Random(701)
    seen = 0
    while seen < 12:
        family = random_two_valued_set(rng)
        cert = affine_independence(family)
        if cert.independent or cert.witness_simplex is None:
            continue
        seen += 1
        for p in (1, 2, 3):
            result = two_valued_gap_identity(cert.witness_simplex, p)
            assert result.gap == 0 and result.equal


def test_dependency_round_trip():
    rng = random.Random(702)
    seen = 0
    while seen < 15:
        family = random_two_valued_set(rng)
        if len(set(family.values)) != len(family):
            continue  # distinct points so the witness exists
        cert = affine_independence(family)
        if cert.independent:
            continue
        seen += 1
        recovered = dependency_from_balanced_simplex(cert.witness_simplex)
        assert proportional(recovered, cert.dependency)


def test_dependency_from_simplex_aggregates_repeats():
    family = FunctionSet(AtomicMeasure.counting(1), ("a", "b", "c"),
                         ((0,), (1,), (2,)))
    # b appears twice on the left; balanced: 2*(1) = 0 + 2
    simplex = Simplex(family, ((1, ONE), (1, ONE)), ((0, ONE), (2, ONE)))
    assert is_balanced(simplex)
    lam = dependency_from_balanced_simplex(simplex)
    assert lam == (-ONE, Fraction(2), -ONE)


def test_dependency_preconditions():
    family = FunctionSet(AtomicMeasure.counting(1), ("a", "b"), ((0,), (1,)))
    degenerate = Simplex(family, ((0, ONE),), ((0, ONE),))
    with pytest.raises(PreconditionError):
        dependency_from_balanced_simplex(degenerate)
    unbalanced = Simplex(family, ((0, ONE),), ((1, ONE),))
    with pytest.raises(PreconditionError):
        dependency_from_balanced_simplex(unbalanced)


def test_bad_dependencies_rejected():
    cube = hamming_cube(2)
    with pytest.raises(CertificateError):
        balanced_simplex_from_dependency(cube, (ONE, -ONE, -ONE))
    with pytest.raises(CertificateError):
        balanced_simplex_from_dependency(cube, (ZERO, ZERO, ZERO, ZERO))
    with pytest.raises(CertificateError):
        balanced_simplex_from_dependency(cube, (ONE, ONE, -ONE, -ONE))
    with pytest.raises(CertificateError):
        balanced_simplex_from_dependency(cube, (ONE, ONE, -ONE, ONE))


def test_zero_coefficients_drop_points():
    family = FunctionSet(AtomicMeasure.counting(1), ("a", "b", "c", "d"),
                         ((0,), (1,), (2,), (5,)))
    lam = (ONE, Fraction(-2), ONE, ZERO)
    simplex = balanced_simplex_from_dependency(family, lam)
    used = {i for i, _ in (*simplex.left, *simplex.right)}
    assert used == {0, 1, 2}


def test_duplicate_rows_dependent_but_without_witness():
    family = FunctionSet(AtomicMeasure.counting(2), ("a", "a2"),
                         ((1, 0), (1, 0)))
    cert = affine_independence(family)
    assert not cert.independent
    assert cert.dependency is not None
    assert cert.witness_simplex is None


def test_verdict_invariant_under_reordering_translation_and_change_of_basis():
    rng = random.Random(703)
    for _ in range(15):
        family = random_two_valued_set(rng, max_points=5, max_atoms=3)
        atoms = len(family.measure)
        verdict = affine_independence(family).independent

        order = list(range(len(family)))
        rng.shuffle(order)
        reordered = FunctionSet(family.measure,
                                tuple(family.labels[i] for i in order),
                                tuple(family.values[i] for i in order))
        assert affine_independence(reordered).independent == verdict

        shift = tuple(rand_fraction(rng, -3, 3, 4) for _ in range(atoms))
        translated = FunctionSet(
            family.measure, family.labels,
            tuple(tuple(x + s for x, s in zip(row, shift)) for row in family.values))
        assert affine_independence(translated).independent == verdict

        while True:
            transform = [[rand_fraction(rng, -2, 2, 2) for _ in range(atoms)]
                         for _ in range(atoms)]
            from support import det_fraction
            if det_fraction(transform) != 0:
                break
        changed = FunctionSet(
            family.measure, family.labels,
            tuple(tuple(sum((transform[r][c] * row[c] for c in range(atoms)), ZERO)
                        for r in range(atoms)) for row in family.values))
        assert affine_independence(changed).independent == verdict


@pytest.mark.parametrize("p", (0.5, 1, 2, 3))
def test_two_valued_strictness_equals_affine_independence(p):
    rng = random.Random(704)
    for _ in range(12):
        n = rng.randint(2, 4)
        size = rng.randint(2, min(6, 2 ** n))
        family = cube_subset(n, size, seed=rng.randint(0, 10 ** 6))
        verdict = negative_type_check(powered_distance_matrix(family, p),
                                      strictness_requested=True)
        assert verdict.strict == affine_independence(family).independent


def test_strict_two_valued_sets_fit_in_atom_dimension_plus_one():
    rng = random.Random(705)
    for _ in range(20):
        n = rng.randint(1, 4)
        size = rng.randint(2, 2 ** n)
        family = cube_subset(n, size, seed=rng.randint(0, 10 ** 6))
        verdict = negative_type_check(powered_distance_matrix(family, 1),
                                      strictness_requested=True)
        if verdict.strict:
            assert len(family) <= len(family.measure) + 1
