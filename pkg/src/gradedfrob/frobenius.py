"""Decision procedures for graded Frobenius and graded symmetric algebras.

Each positive verdict carries a certificate (bilinear form, trace functional,
or isomorphism matrix) that ``verify_certificate`` re-checks without any
randomness; negative verdicts carry either a deterministic refutation or an
explicit error bound from the randomized search.  The criteria equivalence
(isomorphism / bilinear form / neutral-component) is exploited as a runtime
self-check: certified disagreement raises ``InternalInconsistencyError``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import (GradedAlgebra, GradedLinearMap, GradedModule,
                      degree_e_subalgebra, dual_module, module_degree_component,
                      regular_module, suspend_left, ungrade)
from .groups import is_subgroup
from .homs import IsoVerdict, coinduction_unit, graded_iso, morphism_violations
from .linalg import (Budget, Matrix, generic_invertible, kernel_of_rows, matrix,
                     matvec, rank, solve_rows)
from .scalars import Field, Scalar


class InternalInconsistencyError(RuntimeError):
    """Certified answers of provably equivalent criteria disagree."""


@dataclass
class Refutation:
    reason: str  # component_dim_mismatch | faithfulness_witness | torsion_witness
    #            | determinant_zero_certified | probabilistic
    certified: bool
    error_bound: Optional[Fraction] = None
    witness_degree: Optional[int] = None
    witness_vector: Optional[List[Scalar]] = None
    detail: str = ""


@dataclass
class Certificate:
    kind: str  # "iso_matrix" | "bilinear_form" | "trace_functional"
    sigma: int
    field: Field
    payload_matrix: Optional[Matrix] = None
    payload_vector: Optional[List[Scalar]] = None


@dataclass
class Verdict:
    outcome: str  # "yes" | "no" | "inconclusive"
    method: str
    sigma: Optional[int] = None
    certificate: Optional[Certificate] = None
    refutation: Optional[Refutation] = None

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"

    @property
    def certified(self) -> bool:
        if self.outcome == "yes":
            return self.certificate is not None
        if self.outcome == "no":
            return self.refutation is not None and self.refutation.certified
        return False

    @property
    def error_bound(self) -> Optional[Fraction]:
        return self.refutation.error_bound if self.refutation else None


# ---------------------------------------------------------------------------
# Faithfulness and torsion

def left_sigma_faithful(a: GradedAlgebra, sigma: int):
    """("yes", None) or ("no", (degree, witness)): a nonzero homogeneous vector
    annihilated by every left multiplication from the complementary component."""
    return _sigma_faithful(a, sigma, "left")


def right_sigma_faithful(a: GradedAlgebra, sigma: int):
    return _sigma_faithful(a, sigma, "right")


def _sigma_faithful(a: GradedAlgebra, sigma: int, side: str):
    f, g = a.field, a.group
    for deg in sorted(set(a.deg)):
        comp = a.component_indices(deg)
        if side == "left":
            ann_degree = g.mul(sigma, g.inv(deg))
        else:
            ann_degree = g.mul(g.inv(deg), sigma)
        annihilators = a.component_indices(ann_degree)
        if not annihilators:
            witness = [f.one if k == comp[0] else f.zero for k in range(a.dim)]
            return "no", (deg, witness)
        rows = []
        for i in annihilators:
            for t in range(a.dim):
                if side == "left":
                    row = [a.sc.get((i, j), {}).get(t, f.zero) for j in comp]
                else:
                    row = [a.sc.get((j, i), {}).get(t, f.zero) for j in comp]
                if any(not f.is_zero(x) for x in row):
                    rows.append(row)
        kernel = kernel_of_rows(f, rows, len(comp))
        if kernel:
            witness = [f.zero] * a.dim
            for j, v in zip(comp, kernel[0]):
                witness[j] = v
            return "no", (deg, witness)
    return "yes", None


def torsion_radical(m: GradedModule, sigma: int) -> List[Tuple[int, List[Scalar]]]:
    """Homogeneous basis of the largest graded submodule whose degree-sigma
    component vanishes, computed as the kernel of the coinduction unit map."""
    nu, _ = coinduction_unit(m, sigma)
    f = m.algebra.field
    out = []
    for deg in sorted(set(m.deg)):
        cols = m.component_indices(deg)
        rows = [[nu.matrix.data[r][j] for j in cols] for r in range(nu.matrix.rows)]
        for vec in kernel_of_rows(f, rows, len(cols)):
            full = [f.zero] * m.dim
            for j, v in zip(cols, vec):
                full[j] = v
            out.append((deg, full))
    return out


# ---------------------------------------------------------------------------
# sigma-graded Frobenius: three criteria

def _basis_vector(f: Field, dim: int, i: int) -> List[Scalar]:
    return [f.one if k == i else f.zero for k in range(dim)]


def _refutation_from_iso(r: IsoVerdict, detail: str) -> Refutation:
    return Refutation(r.reason or "probabilistic", r.certified,
                      error_bound=r.error_bound, detail=detail)


def _method_iso(a: GradedAlgebra, sigma: int, budget, rng) -> Verdict:
    left_reg = suspend_left(regular_module(a, "left"), sigma)
    dual_right = dual_module(regular_module(a, "right"))
    r = graded_iso(left_reg, dual_right, budget, rng)
    if r.is_yes:
        cert = Certificate("bilinear_form", sigma, a.field,
                           payload_matrix=r.witness.matrix)
        _insist_valid(a, cert, "iso")
        return Verdict("yes", "iso", sigma, certificate=cert)
    return Verdict("no", "iso", sigma,
                   refutation=_refutation_from_iso(r, "suspended regular vs dual"))


def _method_form(a: GradedAlgebra, sigma: int, budget, rng) -> Verdict:
    f, g = a.field, a.group
    pos: Dict[Tuple[int, int], int] = {}
    for i in range(a.dim):
        for j in range(a.dim):
            if g.mul(a.deg[i], a.deg[j]) == sigma:
                pos[(i, j)] = len(pos)
    if not pos:
        return Verdict("no", "form", sigma,
                       refutation=Refutation("determinant_zero_certified", True,
                                             detail="no degree pair multiplies to sigma"))
    rows = []
    for i in range(a.dim):
        for j in range(a.dim):
            prod_ij = a.sc.get((i, j))
            for k in range(a.dim):
                if g.mul(g.mul(a.deg[i], a.deg[j]), a.deg[k]) != sigma:
                    continue
                row = [f.zero] * len(pos)
                nonzero = False
                if prod_ij:
                    for l, v in prod_ij.items():
                        idx = pos[(l, k)]
                        row[idx] = f.add(row[idx], v)
                        nonzero = True
                prod_jk = a.sc.get((j, k))
                if prod_jk:
                    for l, v in prod_jk.items():
                        idx = pos[(i, l)]
                        row[idx] = f.sub(row[idx], v)
                        nonzero = True
                if nonzero:
                    rows.append(row)
    kernel = kernel_of_rows(f, rows, len(pos)) if rows else \
        [_basis_vector(f, len(pos), t) for t in range(len(pos))]
    if not kernel:
        return Verdict("no", "form", sigma,
                       refutation=Refutation("determinant_zero_certified", True,
                                             detail="no associative sigma-supported form"))
    grams = []
    for vec in kernel:
        data = [[f.zero] * a.dim for _ in range(a.dim)]
        for (i, j), idx in pos.items():
            data[i][j] = vec[idx]
        grams.append(matrix(f, data, cols=a.dim))
    verdict = generic_invertible(grams, budget, rng)
    if verdict.found:
        cert = Certificate("bilinear_form", sigma, a.field, payload_matrix=verdict.witness)
        _insist_valid(a, cert, "form")
        return Verdict("yes", "form", sigma, certificate=cert)
    if verdict.outcome == "certified_absent":
        return Verdict("no", "form", sigma,
                       refutation=Refutation("determinant_zero_certified", True,
                                             detail="every admissible form is degenerate"))
    return Verdict("no", "form", sigma,
                   refutation=Refutation("probabilistic", False,
                                         error_bound=verdict.error_bound))


def _method_component(a: GradedAlgebra, sigma: int, budget, rng) -> Verdict:
    faithful, witness = left_sigma_faithful(a, sigma)
    if faithful == "no":
        deg, vec = witness
        return Verdict("no", "component", sigma,
                       refutation=Refutation("faithfulness_witness", True,
                                             witness_degree=deg, witness_vector=vec))
    subalg, idxs = degree_e_subalgebra(a)
    comp = module_degree_component(regular_module(a, "left"), sigma, subalg, idxs)
    target = dual_module(regular_module(subalg, "right"))
    r = graded_iso(comp, target, budget, rng)
    if not r.is_yes:
        return Verdict("no", "component", sigma,
                       refutation=_refutation_from_iso(
                           r, "degree-sigma component vs dual of neutral component"))
    # Assemble the bilinear form the component criterion certifies:
    # B(x, y) = theta((x y)_sigma) evaluated at the unit of A_e.
    f = a.field
    comp_indices = a.component_indices(sigma)
    local = {j: t for t, j in enumerate(comp_indices)}
    theta = r.witness.matrix
    data = [[f.zero] * a.dim for _ in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            if a.group.mul(a.deg[i], a.deg[j]) != sigma:
                continue
            prod = a.sc.get((i, j))
            if not prod:
                continue
            w = [f.zero] * len(comp_indices)
            for k, v in prod.items():
                w[local[k]] = v
            image = matvec(theta, w)
            val = f.zero
            for t, uv in enumerate(subalg.unit):
                if not f.is_zero(uv):
                    val = f.add(val, f.mul(image[t], uv))
            data[i][j] = val
    cert = Certificate("bilinear_form", sigma, a.field,
                       payload_matrix=matrix(f, data, cols=a.dim))
    _insist_valid(a, cert, "component")
    return Verdict("yes", "component", sigma, certificate=cert)


def _insist_valid(a: GradedAlgebra, cert: Certificate, method: str) -> None:
    ok, reason = verify_certificate(a, cert)
    if not ok:
        raise InternalInconsistencyError(
            f"method {method} produced a certificate that fails verification: {reason}")


_METHODS = {"iso": _method_iso, "form": _method_form, "component": _method_component}


def is_sigma_graded_frobenius(a: GradedAlgebra, sigma: int, method: str = "all",
                              budget: Optional[Budget] = None,
                              rng: Optional[random.Random] = None) -> Verdict:
    """Decide whether the shifted regular module and the dual are isomorphic
    as graded modules, via one criterion or all three cross-checked."""
    if not 0 <= sigma < a.group.order:
        raise ValueError(f"sigma {sigma} is not an element of the grading group")
    rng = rng or random.Random(0)
    if method in _METHODS:
        return _METHODS[method](a, sigma, budget, rng)
    if method != "all":
        raise ValueError(f"unknown method {method!r}")
    results = [(name, fn(a, sigma, budget, rng)) for name, fn in _METHODS.items()]
    certified = [(name, v) for name, v in results if v.certified]
    outcomes = {v.outcome for _, v in certified}
    if len(outcomes) > 1:
        summary = ", ".join(f"{name}={v.outcome}" for name, v in certified)
        raise InternalInconsistencyError(
            f"criteria disagree at sigma={sigma}: {summary}")
    if certified:
        for name, v in certified:
            if v.is_yes:
                return v
        return certified[0][1]
    best = min(results, key=lambda nv: nv[1].refutation.error_bound)
    return best[1]


# ---------------------------------------------------------------------------
# Scans, inertia group, strong grading

@dataclass
class InertiaResult:
    members: List[int]
    witnesses: Dict[int, GradedLinearMap]
    refuted_certified: Dict[int, bool]
    subgroup_ok: Optional[bool] = None


def inertia_group(a: GradedAlgebra, budget: Optional[Budget] = None,
                  rng: Optional[random.Random] = None) -> InertiaResult:
    """All degrees whose suspension leaves the regular module isomorphic to
    itself in the graded category; the result is checked to be a subgroup."""
    rng = rng or random.Random(0)
    left_reg = regular_module(a, "left")
    members, witnesses, refuted = [], {}, {}
    for g in a.group.elements():
        r = graded_iso(suspend_left(left_reg, g), left_reg, budget, rng)
        if r.is_yes:
            members.append(g)
            witnesses[g] = r.witness
        else:
            refuted[g] = r.certified
    result = InertiaResult(members, witnesses, refuted)
    if is_subgroup(a.group, members):
        result.subgroup_ok = True
    elif all(refuted.values()):
        raise InternalInconsistencyError(
            f"inertia degrees {members} do not form a subgroup")
    else:
        result.subgroup_ok = None  # a randomized miss may hide a member
    return result


@dataclass
class ScanResult:
    verdicts: Dict[int, Verdict]
    yes_set: List[int]
    inertia: Optional[InertiaResult] = None
    coset_ok: Optional[bool] = None


def scan_sigma(a: GradedAlgebra, budget: Optional[Budget] = None,
               rng: Optional[random.Random] = None, method: str = "all",
               check_coset: bool = True) -> ScanResult:
    """Per-degree Frobenius verdicts; a nonempty yes-set is checked to be a
    left coset of the inertia group."""
    rng = rng or random.Random(0)
    verdicts = {}
    for sigma in a.group.elements():
        verdicts[sigma] = is_sigma_graded_frobenius(a, sigma, method, budget, rng)
    yes_set = [s for s, v in verdicts.items() if v.is_yes]
    result = ScanResult(verdicts, yes_set)
    if yes_set and check_coset:
        inertia = inertia_group(a, budget, rng)
        result.inertia = inertia
        base = yes_set[0]
        expected = sorted(a.group.mul(base, g) for g in inertia.members)
        if expected == sorted(yes_set):
            result.coset_ok = True
        else:
            hard = True
            for s in set(expected) - set(yes_set):
                if not verdicts[s].certified:
                    hard = False
            for s in set(yes_set) - set(expected):
                g = a.group.mul(a.group.inv(base), s)
                if not inertia.refuted_certified.get(g, True):
                    hard = False
            if hard:
                raise InternalInconsistencyError(
                    f"yes-set {sorted(yes_set)} is not the coset {expected} "
                    f"of the inertia group")
            result.coset_ok = None
    return result


def is_strongly_graded(a: GradedAlgebra):
    """("yes", None) or ("no", g): the unit must lie in span(A_g A_{g^-1}) for
    every degree g."""
    f, g = a.field, a.group
    for elem in g.elements():
        left = a.component_indices(elem)
        right = a.component_indices(g.inv(elem))
        products = []
        for i in left:
            for j in right:
                col = a.sc.get((i, j))
                if col:
                    products.append([col.get(t, f.zero) for t in range(a.dim)])
        if not products:
            return "no", elem
        rows = [[p[t] for p in products] for t in range(a.dim)]
        if solve_rows(f, rows, len(products), list(a.unit)) is None:
            return "no", elem
    return "yes", None


# ---------------------------------------------------------------------------
# Graded symmetric / ungraded specializations

def is_graded_symmetric(a: GradedAlgebra, budget: Optional[Budget] = None,
                        rng: Optional[random.Random] = None) -> Verdict:
    """Search for a trace-like functional: supported in the neutral degree,
    annihilating commutators, with non-degenerate induced pairing."""
    rng = rng or random.Random(0)
    f, g = a.field, a.group
    e = g.neutral
    evars = [t for t in range(a.dim) if a.deg[t] == e]
    pos = {t: s for s, t in enumerate(evars)}
    rows = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            row = [f.zero] * len(evars)
            nonzero = False
            for k, v in a.sc.get((i, j), {}).items():
                if k in pos:
                    row[pos[k]] = f.add(row[pos[k]], v)
                    nonzero = True
            for k, v in a.sc.get((j, i), {}).items():
                if k in pos:
                    row[pos[k]] = f.sub(row[pos[k]], v)
                    nonzero = True
            if nonzero:
                rows.append(row)
    kernel = kernel_of_rows(f, rows, len(evars)) if rows else \
        [_basis_vector(f, len(evars), s) for s in range(len(evars))]
    if not kernel:
        return Verdict("no", "trace", g.neutral,
                       refutation=Refutation("determinant_zero_certified", True,
                                             detail="no central functional survives"))
    grams = []
    for vec in kernel:
        lam = [f.zero] * a.dim
        for t, s in pos.items():
            lam[t] = vec[s]
        data = [[f.zero] * a.dim for _ in range(a.dim)]
        for (i, j), col in a.sc.items():
            val = f.zero
            for k, v in col.items():
                if not f.is_zero(lam[k]):
                    val = f.add(val, f.mul(v, lam[k]))
            if not f.is_zero(val):
                data[i][j] = val
        grams.append((lam, matrix(f, data, cols=a.dim)))
    verdict = generic_invertible([gm for _, gm in grams], budget, rng)
    if verdict.found:
        lam = [f.zero] * a.dim
        for coeff, (lv, _) in zip(verdict.coefficients, grams):
            if f.is_zero(coeff):
                continue
            for t in range(a.dim):
                lam[t] = f.add(lam[t], f.mul(coeff, lv[t]))
        cert = Certificate("trace_functional", e, a.field, payload_vector=lam)
        ok, reason = verify_certificate(a, cert)
        if not ok:
            raise InternalInconsistencyError(
                f"trace functional failed verification: {reason}")
        return Verdict("yes", "trace", e, certificate=cert)
    if verdict.outcome == "certified_absent":
        return Verdict("no", "trace", e,
                       refutation=Refutation("determinant_zero_certified", True))
    return Verdict("no", "trace", e,
                   refutation=Refutation("probabilistic", False,
                                         error_bound=verdict.error_bound))


def is_frobenius(a: GradedAlgebra, method: str = "all",
                 budget: Optional[Budget] = None,
                 rng: Optional[random.Random] = None) -> Verdict:
    """Frobenius as an ungraded algebra: the trivial-group specialization."""
    plain = ungrade(a)
    return is_sigma_graded_frobenius(plain, plain.group.neutral, method, budget, rng)


def is_symmetric(a: GradedAlgebra, budget: Optional[Budget] = None,
                 rng: Optional[random.Random] = None) -> Verdict:
    """Symmetric as an ungraded algebra: the trivial-group specialization."""
    return is_graded_symmetric(ungrade(a), budget, rng)


def graded_division_symmetry_hypothesis(a: GradedAlgebra) -> bool:
    """Whether the center of the neutral component consists of central elements
    of the whole algebra (the sufficient condition for a graded division
    algebra to be graded symmetric)."""
    from .algebra import center, degree_e_subalgebra
    f = a.field
    subalg, idxs = degree_e_subalgebra(a)
    for vec in center(subalg):
        embedded = [f.zero] * a.dim
        for local, v in enumerate(vec):
            embedded[idxs[local]] = v
        left = a.left_mult_matrix(embedded)
        right = a.right_mult_matrix(embedded)
        if left.data != right.data:
            return False
    return True


# ---------------------------------------------------------------------------
# Certificate verification (deterministic)

def verify_certificate(a: GradedAlgebra, cert: Certificate):
    """(True, "accept") or (False, reason); no randomness anywhere."""
    f, g = a.field, a.group
    if cert.field != f:
        return False, f"field mismatch: certificate over {cert.field}, algebra over {f}"
    if not 0 <= cert.sigma < g.order:
        return False, f"sigma {cert.sigma} is not a group element"
    if cert.kind == "bilinear_form":
        b = cert.payload_matrix
        if b is None or b.rows != a.dim or b.cols != a.dim:
            return False, "malformed payload: expected a dim x dim matrix"
        for i in range(a.dim):
            for j in range(a.dim):
                if g.mul(a.deg[i], a.deg[j]) != cert.sigma and not f.is_zero(b.data[i][j]):
                    return False, f"orthogonality violated at ({i},{j})"
        for i in range(a.dim):
            for j in range(a.dim):
                prod_ij = a.sc.get((i, j), {})
                for k in range(a.dim):
                    lhs = f.zero
                    for l, v in prod_ij.items():
                        bv = b.data[l][k]
                        if bv:
                            lhs = f.add(lhs, f.mul(v, bv))
                    rhs = f.zero
                    for l, v in a.sc.get((j, k), {}).items():
                        bv = b.data[i][l]
                        if bv:
                            rhs = f.add(rhs, f.mul(v, bv))
                    if lhs != rhs:
                        return False, f"associativity violated at triple ({i},{j},{k})"
        if rank(b) != a.dim:
            return False, "degenerate form"
        return True, "accept"
    if cert.kind == "trace_functional":
        lam = cert.payload_vector
        if lam is None or len(lam) != a.dim:
            return False, "malformed payload: expected a vector of length dim"
        if cert.sigma != g.neutral:
            return False, "trace functional must sit at the neutral degree"
        for t in range(a.dim):
            if a.deg[t] != g.neutral and not f.is_zero(lam[t]):
                return False, f"functional supported outside the neutral degree at {t}"
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                val = f.zero
                for k, v in a.sc.get((i, j), {}).items():
                    val = f.add(val, f.mul(v, lam[k]))
                for k, v in a.sc.get((j, i), {}).items():
                    val = f.sub(val, f.mul(v, lam[k]))
                if not f.is_zero(val):
                    return False, f"commutator not annihilated at pair ({i},{j})"
        data = [[f.zero] * a.dim for _ in range(a.dim)]
        for (i, j), col in a.sc.items():
            val = f.zero
            for k, v in col.items():
                val = f.add(val, f.mul(v, lam[k]))
            data[i][j] = val
        if rank(matrix(f, data, cols=a.dim)) != a.dim:
            return False, "induced form degenerate"
        return True, "accept"
    if cert.kind == "iso_matrix":
        t = cert.payload_matrix
        if t is None or t.rows != a.dim or t.cols != a.dim:
            return False, "malformed payload: expected a dim x dim matrix"
        source = suspend_left(regular_module(a, "left"), cert.sigma)
        target = dual_module(regular_module(a, "right"))
        problems = morphism_violations(GradedLinearMap(source, target, t))
        if problems:
            return False, problems[0]
        if rank(t) != a.dim:
            return False, "matrix not invertible"
        return True, "accept"
    return False, f"unknown certificate kind {cert.kind!r}"


# ---------------------------------------------------------------------------
# Radical and local rings (trace-form route)

class UnsupportedFieldError(ValueError):
    """The trace-form radical needs characteristic 0 or p > dim."""


def jacobson_radical(b: GradedAlgebra) -> List[List[Scalar]]:
    """Radical of the trace form (x, y) -> trace(L_x L_y), a subspace basis.

    Valid as the Jacobson radical for characteristic 0 or p > dim.
    """
    f = b.field
    if f.is_prime_field and f.characteristic <= b.dim:
        raise UnsupportedFieldError(
            f"trace-form radical needs characteristic > dim; have "
            f"p={f.characteristic}, dim={b.dim}")
    mults = [b.left_mult_matrix(_basis_vector(f, b.dim, i)) for i in range(b.dim)]
    gram = []
    for i in range(b.dim):
        row = []
        for j in range(b.dim):
            tr = f.zero
            for s in range(b.dim):
                for t in range(b.dim):
                    tr = f.add(tr, f.mul(mults[i].data[s][t], mults[j].data[t][s]))
            row.append(tr)
        gram.append(row)
    return kernel_of_rows(f, gram, b.dim)


def is_local(b: GradedAlgebra, enumeration_limit: int = 10**6) -> str:
    """"yes" | "no" | "unsupported": is the quotient by the radical a division
    algebra?  Decidable when that quotient is one-dimensional or small enough
    to enumerate over a finite field."""
    try:
        radical = jacobson_radical(b)
    except UnsupportedFieldError:
        return "unsupported"
    f = b.field
    dim_q = b.dim - len(radical)
    if dim_q == 1:
        return "yes"
    if not f.is_prime_field or f.characteristic ** dim_q > enumeration_limit:
        return "unsupported"
    # Quotient structure constants on the complement of the radical.
    from .linalg import _rref_scalar_rows  # reduced rows of the radical span
    piv_cols, piv_rows = _rref_scalar_rows(f, radical, b.dim) if radical else ([], [])

    def reduce_mod_radical(vec):
        vec = list(vec)
        for c, row in zip(piv_cols, piv_rows):
            if not f.is_zero(vec[c]):
                scale = f.div(vec[c], row[c])
                for t in range(b.dim):
                    vec[t] = f.sub(vec[t], f.mul(scale, row[t]))
        return vec

    complement = [t for t in range(b.dim) if t not in set(piv_cols)]
    qd = len(complement)
    qsc = {}
    for s1, c1 in enumerate(complement):
        for s2, c2 in enumerate(complement):
            prod = reduce_mod_radical(
                b.multiply(_basis_vector(f, b.dim, c1), _basis_vector(f, b.dim, c2)))
            qsc[(s1, s2)] = {s: prod[c] for s, c in enumerate(complement)}
    p = f.characteristic
    for point in itertools.product(range(p), repeat=qd):
        if not any(point):
            continue
        cols = [[f.zero] * qd for _ in range(qd)]
        for (s1, s2), col in qsc.items():
            if point[s1] == 0:
                continue
            for s, v in col.items():
                cols[s2][s] = f.add(cols[s2][s], f.mul(point[s1], v))
        left_mult = [[cols[j][s] for j in range(qd)] for s in range(qd)]
        piv, _ = _rref_scalar_rows(f, left_mult, qd)
        if len(piv) != qd:
            return "no"
    return "yes"
