"""Structural invariants exercised on a randomized corpus of small algebras."""

import random

import pytest

from gradedfrob.algebra import (degree_e_subalgebra, dual_module,
                                module_degree_component, regular_module,
                                suspend_left, suspend_right, validate_algebra,
                                validate_module)
from gradedfrob.constructions import random_graded_algebra
from gradedfrob.frobenius import (is_sigma_graded_frobenius, left_sigma_faithful,
                                  scan_sigma, torsion_radical, verify_certificate)
from gradedfrob.homs import graded_hom_basis, graded_iso
from gradedfrob.linalg import rank_of_rows
from gradedfrob.scalars import QQ, prime_field

F7 = prime_field(7)
CORPUS_SIZE = 36


@pytest.fixture(scope="module")
def corpus():
    out = []
    for seed in range(CORPUS_SIZE):
        field = QQ if seed % 2 == 0 else F7
        out.append((seed, random_graded_algebra(seed, field=field)))
    return out


def test_corpus_is_valid(corpus):
    for seed, a in corpus:
        assert validate_algebra(a) == [], seed


def test_regular_and_dual_modules_validate(corpus):
    for seed, a in corpus:
        for side in ("left", "right"):
            m = regular_module(a, side)
            assert validate_module(m) == [], (seed, side)
            assert validate_module(dual_module(m)) == [], (seed, side)


def test_double_dual_identity(corpus):
    for seed, a in corpus:
        for side in ("left", "right"):
            m = regular_module(a, side)
            assert dual_module(dual_module(m)).data_equal(m), seed


def test_dual_suspension_identity(corpus):
    for seed, a in corpus:
        m = regular_module(a, "left")
        for sigma in a.group.elements():
            left = dual_module(suspend_left(m, sigma))
            right = suspend_right(dual_module(m), a.group.inv(sigma))
            assert left.data_equal(right), (seed, sigma)


def test_dual_component_dims(corpus):
    for seed, a in corpus:
        m = regular_module(a, "left")
        d = dual_module(m)
        dims_m, dims_d = m.component_dims(), d.component_dims()
        for g in a.group.elements():
            assert dims_d[g] == dims_m[a.group.inv(g)], seed


def test_left_right_criterion_agreement(corpus):
    for seed, a in corpus:
        rng = random.Random(seed)
        for sigma in a.group.elements():
            left = graded_iso(suspend_left(regular_module(a, "left"), sigma),
                              dual_module(regular_module(a, "right")), rng=rng)
            right = graded_iso(suspend_right(regular_module(a, "right"), sigma),
                               dual_module(regular_module(a, "left")), rng=rng)
            if left.certified and right.certified:
                assert left.outcome == right.outcome, (seed, sigma)


def test_free_hom_path_matches_general_solver(corpus):
    for seed, a in corpus:
        if a.dim > 6:
            continue
        rng = random.Random(seed)
        sigma = rng.randrange(a.group.order)
        m = suspend_left(regular_module(a, "left"), sigma)
        n = dual_module(regular_module(a, "right"))
        fast = graded_hom_basis(m, n)
        general = graded_hom_basis(m, n, allow_free_path=False)
        assert len(fast) == len(general), seed
        flat = [[v for row in h.matrix.data for v in row] for h in fast + general]
        if flat:
            assert rank_of_rows(a.field, flat, m.dim * n.dim) == len(fast), seed


def test_faithfulness_equals_vanishing_torsion(corpus):
    for seed, a in corpus:
        if a.dim > 6:
            continue
        m = regular_module(a, "left")
        for sigma in a.group.elements():
            faithful = left_sigma_faithful(a, sigma)[0] == "yes"
            assert faithful == (torsion_radical(m, sigma) == []), (seed, sigma)


def test_torsion_radical_is_graded_submodule(corpus):
    for seed, a in corpus:
        if a.dim > 5 or a.group.order > 4:
            continue
        m = regular_module(a, "left")
        for sigma in a.group.elements():
            basis = torsion_radical(m, sigma)
            span = [vec for _, vec in basis]
            if not span:
                continue
            base_rank = rank_of_rows(a.field, span, m.dim)
            # closed under every basis action
            for i in range(a.dim):
                acted = [m.apply(i, vec) for vec in span]
                assert rank_of_rows(a.field, span + acted, m.dim) == base_rank, seed
            # degree-sigma coordinates vanish
            for _, vec in basis:
                for j in a.component_indices(sigma):
                    assert a.field.is_zero(vec[j]), (seed, sigma)


def test_yes_certificates_verify(corpus):
    for seed, a in corpus:
        rng = random.Random(seed)
        verdict = is_sigma_graded_frobenius(a, a.group.neutral, rng=rng)
        if verdict.is_yes:
            ok, reason = verify_certificate(a, verdict.certificate)
            assert ok, (seed, reason)


def test_scan_coset_structure_never_violated(corpus):
    for seed, a in corpus:
        if a.group.order > 4 or a.dim > 6:
            continue
        result = scan_sigma(a, rng=random.Random(seed))
        assert result.coset_ok in (True, None), seed


def test_graded_symmetric_implies_frobenius_and_symmetric(corpus):
    from gradedfrob.frobenius import is_graded_symmetric, is_symmetric
    hits = 0
    for seed, a in corpus:
        rng = random.Random(seed)
        if not is_graded_symmetric(a, rng=rng).is_yes:
            continue
        hits += 1
        assert is_sigma_graded_frobenius(a, a.group.neutral, rng=rng).is_yes, seed
        assert is_symmetric(a, rng=rng).is_yes, seed
    assert hits > 0


def test_graded_division_with_central_hypothesis_is_graded_symmetric(corpus):
    from gradedfrob.algebra import is_graded_division
    from gradedfrob.frobenius import (graded_division_symmetry_hypothesis,
                                      is_graded_symmetric)
    hits = 0
    for seed, a in corpus:
        if is_graded_division(a)[0] != "yes":
            continue
        if not graded_division_symmetry_hypothesis(a):
            continue
        hits += 1
        assert is_graded_symmetric(a, rng=random.Random(seed)).is_yes, seed
    assert hits > 0
