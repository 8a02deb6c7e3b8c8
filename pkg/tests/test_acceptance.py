"""Acceptance suite: fixture verdicts and theorem-equivalence checks.

Each test prints one PASS line on success; any assertion failure marks the
criterion failed.  Everything is exact (no tolerances): the only inexact
outcomes allowed anywhere are probabilistic refutations, which must carry an
error bound of at most 2^-64 over the rationals.
"""

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional

import pytest

from gradedfrob.algebra import (GradedAlgebra, coarsen_grading, degree_e_subalgebra,
                                dual_module, is_graded_division, regular_module,
                                restrict_to_subgroup, suspend_left, suspend_right,
                                tensor_product, validate_algebra)
from gradedfrob.constructions import (group_algebra, matrix_fine_grading,
                                      matrix_good_grading, matrix_over,
                                      named_base_algebra, nakayama_nesbitt,
                                      random_graded_algebra, trivial_extension,
                                      trivial_extension_split)
from gradedfrob.frobenius import (Certificate, InternalInconsistencyError, Verdict,
                                  inertia_group, is_frobenius, is_graded_symmetric,
                                  is_local, is_sigma_graded_frobenius, is_strongly_graded,
                                  is_symmetric, left_sigma_faithful, scan_sigma,
                                  verify_certificate)
from gradedfrob.groups import is_normal, make_cyclic, subgroup_closure
from gradedfrob.homs import graded_iso
from gradedfrob.linalg import matrix
from gradedfrob.scalars import QQ, prime_field

F5 = prime_field(5)
F7 = prime_field(7)
ONE = Fraction(1)
TWO = Fraction(2)
CORPUS_SIZE = 200
MAX_ERROR_BOUND = Fraction(1, 2**64)


def report(criterion: int, text: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS - {text}")


# ---------------------------------------------------------------------------
# Fixture criteria 1-5

def test_criterion_1_nakayama_nesbitt():
    a = nakayama_nesbitt(QQ, ONE, TWO)
    scan = scan_sigma(a, rng=random.Random(0))
    assert scan.yes_set == [3]
    assert is_frobenius(a, rng=random.Random(0)).outcome == "yes"
    assert is_symmetric(a, rng=random.Random(0)).outcome == "no"
    same = nakayama_nesbitt(QQ, ONE, ONE)
    assert is_symmetric(same, rng=random.Random(0)).outcome == "yes"
    assert is_graded_symmetric(same, rng=random.Random(0)).outcome == "no"
    report(1, "Nakayama-Nesbitt: yes-set {3}, Frobenius, symmetric iff u=v, "
              "never graded symmetric")


def test_criterion_2_trivial_extension():
    a = trivial_extension(named_base_algebra("kx2", QQ))
    assert left_sigma_faithful(a, 0)[0] == "no"
    assert left_sigma_faithful(a, 1)[0] == "yes"
    scan = scan_sigma(a, rng=random.Random(0))
    assert scan.yes_set == [1]
    assert is_symmetric(a, rng=random.Random(0)).outcome == "yes"
    assert is_graded_symmetric(a, rng=random.Random(0)).outcome == "no"
    report(2, "trivial extension of k[x]/(x^2): faithful only at 1, yes-set {1}, "
              "symmetric but not graded symmetric")


def test_criterion_3_split_trivial_extension():
    k = named_base_algebra("k", QQ)
    a = trivial_extension_split(k, k)
    scan = scan_sigma(a, rng=random.Random(0))
    assert scan.yes_set == []
    assert is_frobenius(a, rng=random.Random(0)).outcome == "yes"
    report(3, "split trivial extension: empty yes-set yet Frobenius")


def test_criterion_4_good_gradings_trace_certificate():
    cases = [
        matrix_good_grading(QQ, 2, make_cyclic(2), [0, 1]),
        matrix_good_grading(QQ, 3, make_cyclic(3), [0, 1, 2]),
    ]
    for a in cases:
        assert is_graded_symmetric(a, rng=random.Random(0)).outcome == "yes"
        n = int(a.dim ** 0.5)
        trace = [ONE if i == j else Fraction(0) for i in range(n) for j in range(n)]
        cert = Certificate("trace_functional", a.group.neutral, QQ,
                           payload_vector=trace)
        ok, reason = verify_certificate(a, cert)
        assert ok, reason
    report(4, "good-graded M2 and M3 are graded symmetric; literal trace "
              "functional accepted as certificate")


def test_criterion_5_fine_gradings():
    for field in (F5, QQ):
        a = matrix_fine_grading(field, 2)
        assert is_graded_division(a)[0] == "yes"
        assert is_graded_symmetric(a, rng=random.Random(0)).outcome == "yes"
    report(5, "fine-graded M2 over GF(5) and Q: graded division and graded symmetric")


# ---------------------------------------------------------------------------
# Randomized corpus shared by criteria 6-9

@dataclass
class InstanceRecord:
    seed: int
    algebra: GradedAlgebra
    method_verdicts: Dict[int, Dict[str, Verdict]]
    merged: Dict[int, Verdict]
    yes_set: List[int]
    inconsistency_events: int
    frobenius: Optional[Verdict] = None


def _merge(per_method: Dict[str, Verdict]):
    certified = {name: v for name, v in per_method.items() if v.certified}
    outcomes = {v.outcome for v in certified.values()}
    events = 1 if len(outcomes) > 1 else 0
    if certified and not events:
        for v in certified.values():
            if v.is_yes:
                return v, events
        return next(iter(certified.values())), events
    if events:
        return next(iter(certified.values())), events
    best = min(per_method.values(), key=lambda v: v.refutation.error_bound)
    return best, events


@pytest.fixture(scope="module")
def corpus():
    records = []
    for seed in range(CORPUS_SIZE):
        field = QQ if seed % 2 == 0 else F7
        a = random_graded_algebra(seed, field=field)
        rng = random.Random(seed)
        method_verdicts = {}
        merged = {}
        events = 0
        for sigma in a.group.elements():
            per_method = {}
            for method in ("iso", "form", "component"):
                try:
                    per_method[method] = is_sigma_graded_frobenius(
                        a, sigma, method, rng=rng)
                except InternalInconsistencyError:
                    events += 1
            verdict, clash = _merge(per_method)
            events += clash
            method_verdicts[sigma] = per_method
            merged[sigma] = verdict
        yes_set = [s for s, v in merged.items() if v.is_yes]
        frob = is_frobenius(a, method="component", rng=random.Random(seed))
        records.append(InstanceRecord(seed, a, method_verdicts, merged, yes_set,
                                      events, frob))
    return records


def test_criterion_6_criterion_equivalence(corpus):
    assert len(corpus) >= 200
    checked = 0
    for rec in corpus:
        assert rec.inconsistency_events == 0, rec.seed
        for sigma, per_method in rec.method_verdicts.items():
            certified = {name: v.outcome for name, v in per_method.items()
                         if v.certified}
            assert len(set(certified.values())) <= 1, (rec.seed, sigma, certified)
            checked += 1
            if rec.algebra.field == QQ:
                for v in per_method.values():
                    if v.outcome == "no" and not v.certified:
                        assert v.refutation.error_bound <= MAX_ERROR_BOUND, rec.seed
    report(6, f"criteria agree on every certified outcome across {len(corpus)} "
              f"instances / {checked} (instance, degree) pairs; zero "
              f"inconsistency events; rational error bounds <= 2^-64")


def test_criterion_7_structural_theorems(corpus):
    lemma_checked = coset_checked = subgroup_checked = quotient_checked = 0
    strongly_checked = division_checked = tensor_checked = matrix_checked = 0
    leftright_checked = 0
    tensor_pairs = []
    for rec in corpus:
        a = rec.algebra
        # Lemmas 3.1-3.2 shaped identities: dual/suspension and double dual
        m = regular_module(a, "left")
        assert dual_module(dual_module(m)).data_equal(m), rec.seed
        for sigma in a.group.elements():
            left = dual_module(suspend_left(m, sigma))
            right = suspend_right(dual_module(m), a.group.inv(sigma))
            assert left.data_equal(right), rec.seed
        lemma_checked += 1

        # left/right criterion agreement on certified outcomes
        rng = random.Random(rec.seed + 10_000)
        for sigma in a.group.elements():
            right_side = graded_iso(
                suspend_right(regular_module(a, "right"), sigma),
                dual_module(regular_module(a, "left")), rng=rng)
            left_v = rec.merged[sigma]
            if right_side.certified and left_v.certified:
                assert right_side.is_yes == left_v.is_yes, (rec.seed, sigma)
                leftright_checked += 1

        # implications of a nonempty yes-set
        if rec.yes_set:
            assert rec.frobenius.is_yes, rec.seed

            # restriction to a subgroup containing a working degree
            sigma0 = rec.yes_set[0]
            subset = subgroup_closure(a.group, [sigma0])
            if len(subset) < a.group.order:
                sub = restrict_to_subgroup(a, subset)
                local_sigma = subset.index(sigma0)
                v = is_sigma_graded_frobenius(sub, local_sigma,
                                              rng=random.Random(rec.seed))
                assert v.is_yes, (rec.seed, sigma0)
                subgroup_checked += 1

            # coset structure of the yes-set
            inert = inertia_group(a, rng=random.Random(rec.seed))
            expected = sorted(a.group.mul(sigma0, g) for g in inert.members)
            assert expected == sorted(rec.yes_set), rec.seed
            coset_checked += 1

        # quotient gradings preserve graded Frobenius
        if rec.merged[a.group.neutral].is_yes and a.group.order > 1:
            for gen in range(a.group.order):
                subset = subgroup_closure(a.group, [gen])
                if 1 < len(subset) <= a.group.order and is_normal(a.group, subset):
                    quotient = coarsen_grading(a, subset)
                    v = is_sigma_graded_frobenius(quotient, quotient.group.neutral,
                                                  rng=random.Random(rec.seed))
                    assert v.is_yes, (rec.seed, subset)
                    quotient_checked += 1
                    break

        # strongly graded: graded Frobenius iff the neutral component is Frobenius
        strong, _ = is_strongly_graded(a)
        if strong == "yes":
            sub, _ = degree_e_subalgebra(a)
            base = is_frobenius(sub, method="component", rng=random.Random(rec.seed))
            assert rec.merged[a.group.neutral].is_yes == base.is_yes, rec.seed
            strongly_checked += 1

        # graded division algebras are graded Frobenius
        if is_graded_division(a)[0] == "yes":
            assert rec.merged[a.group.neutral].is_yes, rec.seed
            division_checked += 1

        # matrix closure in both directions
        wrapped = matrix_over(a, 2)
        wrapped_verdict = is_frobenius(wrapped, method="component",
                                       rng=random.Random(rec.seed))
        assert wrapped_verdict.is_yes == rec.frobenius.is_yes, rec.seed
        matrix_checked += 1

        if rec.merged[a.group.neutral].is_yes and a.dim <= 4:
            tensor_pairs.append(rec)

    # tensor closure on same-field same-group graded-Frobenius pairs,
    # and on graded-symmetric pairs
    buckets = {}
    for rec in tensor_pairs:
        key = (str(rec.algebra.field), rec.algebra.group.table)
        buckets.setdefault(key, []).append(rec)
    symmetric_checked = 0
    for bucket in buckets.values():
        for one, other in zip(bucket[0::2], bucket[1::2]):
            if one.algebra.dim * other.algebra.dim > 12 or tensor_checked >= 12:
                continue
            product = tensor_product(one.algebra, other.algebra)
            assert validate_algebra(product) == []
            v = is_sigma_graded_frobenius(product, product.group.neutral,
                                          rng=random.Random(one.seed))
            assert v.is_yes, (one.seed, other.seed)
            tensor_checked += 1
            rng = random.Random(one.seed + 20_000)
            if (is_graded_symmetric(one.algebra, rng=rng).is_yes
                    and is_graded_symmetric(other.algebra, rng=rng).is_yes):
                assert is_graded_symmetric(product, rng=rng).is_yes, \
                    (one.seed, other.seed)
                symmetric_checked += 1
    assert tensor_checked > 0

    report(7, "structural theorems hold: "
              f"dual identities x{lemma_checked}, left/right x{leftright_checked}, "
              f"subgroup restriction x{subgroup_checked}, coset x{coset_checked}, "
              f"quotient x{quotient_checked}, strongly-graded x{strongly_checked}, "
              f"graded-division x{division_checked}, tensor x{tensor_checked} "
              f"(symmetric x{symmetric_checked}), matrix closure x{matrix_checked}")


def test_criterion_8_local_ring_theorem(corpus):
    checked = 0
    for rec in corpus:
        if not rec.frobenius.is_yes:
            continue
        sub, _ = degree_e_subalgebra(rec.algebra)
        if is_local(sub) != "yes":
            continue
        assert rec.yes_set, rec.seed
        checked += 1
    assert checked > 0
    report(8, f"every Frobenius instance with local neutral component has a "
              f"nonempty yes-set ({checked} instances)")


def _tamper_candidates(value, field):
    yield field.zero
    yield field.add(value, field.one)
    yield field.add(value, field.from_int(2))


def _find_rejecting_tamper(algebra, cert):
    field = cert.field
    if cert.payload_matrix is not None:
        data = [list(row) for row in cert.payload_matrix.data]
        for i in range(len(data)):
            for j in range(len(data[i])):
                for new in _tamper_candidates(data[i][j], field):
                    if new == data[i][j]:
                        continue
                    tampered = [row[:] for row in data]
                    tampered[i][j] = new
                    bad = Certificate(cert.kind, cert.sigma, field,
                                      payload_matrix=matrix(field, tampered,
                                                            cols=len(data[i])))
                    ok, _ = verify_certificate(algebra, bad)
                    if not ok:
                        return True
        return False
    vec = list(cert.payload_vector)
    for t in range(len(vec)):
        for new in _tamper_candidates(vec[t], field):
            if new == vec[t]:
                continue
            tampered = vec[:]
            tampered[t] = new
            bad = Certificate(cert.kind, cert.sigma, field, payload_vector=tampered)
            ok, _ = verify_certificate(algebra, bad)
            if not ok:
                return True
    return False


def test_criterion_9_certificate_round_trip(corpus):
    verified = tampered = 0
    for rec in corpus:
        for sigma, verdict in rec.merged.items():
            if not verdict.is_yes:
                continue
            ok, reason = verify_certificate(rec.algebra, verdict.certificate)
            assert ok, (rec.seed, sigma, reason)
            verified += 1
            if rec.seed % 10 == 0:
                assert _find_rejecting_tamper(rec.algebra, verdict.certificate), \
                    (rec.seed, sigma)
                tampered += 1
    # also exercise trace functionals
    for algebra in (matrix_good_grading(QQ, 2, make_cyclic(2), [0, 1]),
                    matrix_fine_grading(F5, 2)):
        verdict = is_graded_symmetric(algebra, rng=random.Random(0))
        assert verdict.is_yes
        ok, _ = verify_certificate(algebra, verdict.certificate)
        assert ok
        verified += 1
        assert _find_rejecting_tamper(algebra, verdict.certificate)
        tampered += 1
    assert verified > 0 and tampered > 0
    report(9, f"{verified} certificates re-verified deterministically; "
              f"single-entry tampering rejected on {tampered} of them")
