"""Builders for the graded-algebra example zoo and the randomized corpus.

All builders produce associative algebras by construction: quotients of
polynomial rings, group algebras, matrix algebras with homogeneous matrix
units, trivial extensions, skew group algebras, tensor products, and
regradings.  The randomized generator composes these rather than sampling raw
structure constants (associativity would be a measure-zero event).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (AlgebraError, GradedAlgebra, coarsen_grading,
                      restrict_to_subgroup, tensor_product)
from .groups import (FiniteGroup, make_cyclic, make_from_table,
                     make_product, subgroup_closure, is_normal, trivial_group)
from .linalg import matrix, rank
from .scalars import Field, QQ, Scalar

SC = Dict[Tuple[int, int], Dict[int, Scalar]]


def poly_quotient(field: Field, f_tail: Sequence[Scalar], name: str = "") -> GradedAlgebra:
    """k[x]/(f) for monic f = x^n + a_{n-1} x^{n-1} + ... + a_0, trivially graded.

    ``f_tail`` lists a_0 .. a_{n-1}.
    """
    n = len(f_tail)
    if n == 0:
        raise AlgebraError("polynomial quotient needs degree >= 1")
    tail = [field.parse(str(c)) if isinstance(c, str) else c for c in f_tail]
    # powers[m] = coordinates of x^m in the basis 1, x, ..., x^{n-1}
    powers = []
    for m in range(n):
        powers.append([field.one if i == m else field.zero for i in range(n)])
    for m in range(n, 2 * n - 1):
        prev = powers[m - 1]
        shifted = [field.zero] + prev[:-1]
        overflow = prev[-1]
        if not field.is_zero(overflow):
            for i in range(n):
                shifted[i] = field.sub(shifted[i], field.mul(overflow, tail[i]))
        powers.append(shifted)
    sc: SC = {}
    for i in range(n):
        for j in range(n):
            col = {k: v for k, v in enumerate(powers[i + j]) if not field.is_zero(v)}
            if col:
                sc[(i, j)] = col
    unit = tuple(field.one if i == 0 else field.zero for i in range(n))
    return GradedAlgebra(field, trivial_group(), n, (0,) * n, sc, unit,
                         name=name or f"k[x]/(deg {n})")


def named_base_algebra(name: str, field: Field) -> GradedAlgebra:
    """Small trivially graded algebras used as building blocks: k, k[x]/(x^2),
    k[x]/(x^3), k x k, and M_2(k)."""
    neg_one = field.neg(field.one)
    table = {
        "k": lambda: poly_quotient(field, [field.zero], "k"),
        "kx2": lambda: poly_quotient(field, [field.zero, field.zero], "k[x]/(x^2)"),
        "kx3": lambda: poly_quotient(field, [field.zero] * 3, "k[x]/(x^3)"),
        "kxk": lambda: poly_quotient(field, [field.zero, neg_one], "k x k"),
        "m2": lambda: matrix_good_grading(field, 2, trivial_group(), [0, 0]),
    }
    if name not in table:
        raise AlgebraError(f"unknown base algebra {name!r}; choose from {sorted(table)}")
    return table[name]()


def group_algebra(field: Field, group: FiniteGroup) -> GradedAlgebra:
    """The group algebra kG, graded by deg(g) = g."""
    n = group.order
    sc: SC = {(i, j): {group.mul(i, j): field.one} for i in range(n) for j in range(n)}
    unit = tuple(field.one if i == group.neutral else field.zero for i in range(n))
    return GradedAlgebra(field, group, n, tuple(range(n)), sc, unit, name="kG")


def trivial_extension(r: GradedAlgebra) -> GradedAlgebra:
    """R + R* with (r,f)(r',f') = (rr', rf' + fr'), graded over Z2 with the
    dual part in degree 1."""
    if r.group.order != 1:
        raise AlgebraError("trivial extension takes a trivially graded algebra")
    f = r.field
    n = r.dim
    group = make_cyclic(2)
    sc: SC = {}
    for (i, j), col in r.sc.items():
        sc[(i, j)] = dict(col)                               # R * R
    for i in range(n):
        for j in range(n):
            # b_i . delta_j  (left action on the dual: (a f)(x) = f(x a))
            left = _dual_left_action(r, i, j)
            if left:
                sc[(i, n + j)] = {n + l: v for l, v in left.items()}
            # delta_j . b_i  (right action: (f a)(x) = f(a x))
            right = _dual_right_action(r, i, j)
            if right:
                sc[(n + j, i)] = {n + l: v for l, v in right.items()}
    deg = (0,) * n + (1,) * n
    unit = tuple(r.unit) + (f.zero,) * n
    return GradedAlgebra(f, group, 2 * n, deg, sc, unit,
                         name=f"T({r.name or 'R'})")


def _dual_left_action(r: GradedAlgebra, i: int, j: int) -> Dict[int, Scalar]:
    # b_i . delta_j = sum_l c_{l,i}^j delta_l
    out = {}
    for l in range(r.dim):
        v = r.sc.get((l, i), {}).get(j)
        if v is not None:
            out[l] = v
    return out


def _dual_right_action(r: GradedAlgebra, i: int, j: int) -> Dict[int, Scalar]:
    # delta_j . b_i = sum_l c_{i,l}^j delta_l
    out = {}
    for l in range(r.dim):
        v = r.sc.get((i, l), {}).get(j)
        if v is not None:
            out[l] = v
    return out


def direct_product_algebra(r1: GradedAlgebra, r2: GradedAlgebra) -> GradedAlgebra:
    """R1 x R2 with componentwise operations, trivially graded."""
    if r1.field != r2.field:
        raise AlgebraError("direct factors must share the scalar field")
    if r1.group.order != 1 or r2.group.order != 1:
        raise AlgebraError("direct product factors must be trivially graded")
    f = r1.field
    n1 = r1.dim
    dim = n1 + r2.dim
    sc: SC = {}
    for (i, j), col in r1.sc.items():
        sc[(i, j)] = dict(col)
    for (i, j), col in r2.sc.items():
        sc[(n1 + i, n1 + j)] = {n1 + k: v for k, v in col.items()}
    unit = tuple(r1.unit) + tuple(r2.unit)
    return GradedAlgebra(f, trivial_group(), dim, (0,) * dim, sc, unit,
                         name=f"{r1.name or 'R1'} x {r2.name or 'R2'}")


def trivial_extension_split(r1: GradedAlgebra, r2: GradedAlgebra,
                            group: Optional[FiniteGroup] = None,
                            deg1: int = 1, deg2: int = 2) -> GradedAlgebra:
    """Trivial extension of R1 x R2 with the dual split across two nonneutral
    degrees: (R1 x R2) in the neutral degree, R1* at deg1, R2* at deg2."""
    group = group or make_cyclic(3)
    if group.order < 3:
        raise AlgebraError("split trivial extension needs a group of order >= 3")
    if len({group.neutral, deg1, deg2}) != 3:
        raise AlgebraError("the two dual degrees must be distinct and nonneutral")
    r = direct_product_algebra(r1, r2)
    te = trivial_extension(r)
    n = r.dim
    deg = [group.neutral] * n
    for j in range(r1.dim):
        deg.append(deg1)
    for j in range(r2.dim):
        deg.append(deg2)
    return GradedAlgebra(te.field, group, te.dim, tuple(deg),
                         {k: dict(col) for k, col in te.sc.items()}, te.unit,
                         name=f"Tsplit({r1.name or 'R1'},{r2.name or 'R2'})")


def nakayama_nesbitt(field: Field, u: Scalar, v: Scalar) -> GradedAlgebra:
    """The classical 4-dimensional Nakayama-Nesbitt algebra over Z4:
    XY = u Z, YX = v Z, all other products of X, Y, Z vanish."""
    if field.is_zero(u) or field.is_zero(v):
        raise AlgebraError("parameters must be nonzero")
    group = make_cyclic(4)
    one = field.one
    # basis: 0 = identity, 1 = X, 2 = Y, 3 = Z with degrees 0,1,2,3
    sc: SC = {(0, 0): {0: one}}
    for i in (1, 2, 3):
        sc[(0, i)] = {i: one}
        sc[(i, 0)] = {i: one}
    sc[(1, 2)] = {3: u}
    sc[(2, 1)] = {3: v}
    unit = (one, field.zero, field.zero, field.zero)
    return GradedAlgebra(field, group, 4, (0, 1, 2, 3), sc, unit,
                         name=f"NN(u={field.render(u)},v={field.render(v)})")


def matrix_good_grading(field: Field, n: int, group: FiniteGroup,
                        degrees: Sequence[int]) -> GradedAlgebra:
    """M_n(k) with homogeneous matrix units: deg(e_ij) = degrees[i]^-1 * degrees[j]."""
    if n < 1:
        raise AlgebraError("matrix size must be >= 1")
    if len(degrees) != n:
        raise AlgebraError(f"need {n} row degrees, got {len(degrees)}")
    one = field.one

    def enc(i: int, j: int) -> int:
        return i * n + j

    deg = tuple(group.mul(group.inv(degrees[i]), degrees[j])
                for i in range(n) for j in range(n))
    sc: SC = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                sc[(enc(i, j), enc(j, l))] = {enc(i, l): one}
    unit = [field.zero] * (n * n)
    for i in range(n):
        unit[enc(i, i)] = one
    return GradedAlgebra(field, group, n * n, deg, sc, tuple(unit),
                         name=f"M{n} good")


def _root_of_unity(field: Field, n: int) -> Scalar:
    """A primitive n-th root of unity, or raise when the field has none."""
    if n == 1:
        return field.one
    if not field.is_prime_field:
        if n == 2:
            return field.neg(field.one)
        raise AlgebraError(f"the rationals contain no primitive {n}-th root of unity")
    p = field.characteristic
    if (p - 1) % n != 0:
        raise AlgebraError(f"GF({p}) contains no primitive {n}-th root of unity")
    for c in range(2, p):
        w = pow(c, (p - 1) // n, p)
        if all(pow(w, k, p) != 1 for k in range(1, n)):
            return w
    raise AlgebraError(f"no primitive {n}-th root of unity found in GF({p})")


def matrix_fine_grading(field: Field, n: int) -> GradedAlgebra:
    """M_n(k) on the clock-and-shift basis X^a Y^b, graded by Zn x Zn with
    every homogeneous component one-dimensional."""
    w = _root_of_unity(field, n)
    group = make_product(make_cyclic(n), make_cyclic(n))

    def enc(a: int, b: int) -> int:
        return a * n + b

    def wpow(e: int) -> Scalar:
        e %= n
        out = field.one
        for _ in range(e):
            out = field.mul(out, w)
        return out

    sc: SC = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    # (X^a Y^b)(X^c Y^d) = w^{-bc} X^{a+c} Y^{b+d}
                    coeff = wpow(-b * c)
                    sc[(enc(a, b), enc(c, d))] = {enc((a + c) % n, (b + d) % n): coeff}
    deg = tuple(enc(a, b) for a in range(n) for b in range(n))
    unit = [field.zero] * (n * n)
    unit[enc(0, 0)] = field.one
    return GradedAlgebra(field, group, n * n, deg, sc, tuple(unit),
                         name=f"M{n} fine")


def validate_action(r: GradedAlgebra, group: FiniteGroup,
                    action: Sequence) -> List[str]:
    """Violations of "action is a homomorphism into algebra automorphisms"."""
    f = r.field
    out = []
    if len(action) != group.order:
        return [f"need one matrix per group element ({group.order}), got {len(action)}"]
    mats = [matrix(f, m, cols=r.dim) if not hasattr(m, "data") else m for m in action]
    for g, m in enumerate(mats):
        if m.rows != r.dim or m.cols != r.dim:
            return [f"action matrix for element {g} has wrong shape"]
    ident = [[f.one if i == j else f.zero for j in range(r.dim)] for i in range(r.dim)]
    if [list(row) for row in mats[group.neutral].data] != ident:
        out.append("neutral element must act as the identity")
    from .linalg import matvec, matmul
    for g, m in enumerate(mats):
        if rank(m) != r.dim:
            out.append(f"action of element {g} is not invertible")
            continue
        if matvec(m, list(r.unit)) != list(r.unit):
            out.append(f"action of element {g} does not fix the unit")
        for i in range(r.dim):
            for j in range(r.dim):
                ei = [f.one if t == i else f.zero for t in range(r.dim)]
                ej = [f.one if t == j else f.zero for t in range(r.dim)]
                lhs = matvec(m, r.multiply(ei, ej))
                rhs = r.multiply(matvec(m, ei), matvec(m, ej))
                if lhs != rhs:
                    out.append(f"action of element {g} is not multiplicative at ({i},{j})")
                    break
    for g in group.elements():
        for h in group.elements():
            comp = matmul(mats[g], mats[h])
            if comp.data != mats[group.mul(g, h)].data:
                out.append(f"action is not a homomorphism at pair ({g},{h})")
    return out


def skew_group_algebra(r: GradedAlgebra, group: FiniteGroup,
                       action: Sequence) -> GradedAlgebra:
    """R # G with (r # g)(s # h) = r * alpha_g(s) # gh and deg(r # g) = g."""
    if r.group.order != 1:
        raise AlgebraError("skew group algebra takes a trivially graded coefficient algebra")
    problems = validate_action(r, group, action)
    if problems:
        raise AlgebraError("invalid action: " + "; ".join(problems))
    f = r.field
    mats = [matrix(f, m, cols=r.dim) if not hasattr(m, "data") else m for m in action]
    n = r.dim

    def enc(g: int, t: int) -> int:
        return g * n + t

    sc: SC = {}
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            for t in range(n):
                for s in range(n):
                    # alpha_g(b_s), then multiply by b_t on the left
                    col: Dict[int, Scalar] = {}
                    for u in range(n):
                        av = mats[g].data[u][s]
                        if f.is_zero(av):
                            continue
                        prod = r.sc.get((t, u))
                        if not prod:
                            continue
                        for w, pv in prod.items():
                            key = enc(gh, w)
                            col[key] = f.add(col.get(key, f.zero), f.mul(av, pv))
                    col = {k: v for k, v in col.items() if not f.is_zero(v)}
                    if col:
                        sc[(enc(g, t), enc(h, s))] = col
    deg = tuple(g for g in group.elements() for _ in range(n))
    unit = [f.zero] * (group.order * n)
    for t, uv in enumerate(r.unit):
        unit[enc(group.neutral, t)] = uv
    return GradedAlgebra(f, group, group.order * n, deg, sc, tuple(unit),
                         name=f"{r.name or 'R'}#G")


def identity_action(r: GradedAlgebra, group: FiniteGroup) -> List[List[List[Scalar]]]:
    f = r.field
    ident = [[f.one if i == j else f.zero for j in range(r.dim)] for i in range(r.dim)]
    return [ident for _ in group.elements()]


def matrix_over(a: GradedAlgebra, n: int) -> GradedAlgebra:
    """M_n(A): the tensor product with a trivially good-graded M_n(k)."""
    mn = matrix_good_grading(a.field, n, a.group, [a.group.neutral] * n)
    return tensor_product(a, mn)


# ---------------------------------------------------------------------------
# Randomized corpus

def _random_group(rng: random.Random, max_order: int) -> FiniteGroup:
    choices = [n for n in (1, 2, 3, 4, 5, 6) if n <= max_order]
    kind = rng.random()
    if kind < 0.3 and max_order >= 2:
        return make_cyclic(2)
    if kind < 0.75 or max_order < 4:
        return make_cyclic(rng.choice(choices))
    if kind < 0.92 and max_order >= 4:
        return make_product(make_cyclic(2), make_cyclic(2))
    if max_order >= 6:
        return symmetric_group_3()
    return make_cyclic(rng.choice(choices))


def symmetric_group_3() -> FiniteGroup:
    """S3 as an explicit table (composition of permutations of three letters)."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(x) for x in p) for p in perms]
    return make_from_table(6, table, labels=labels)


def _random_poly_quotient(rng: random.Random, field: Field, max_degree: int) -> GradedAlgebra:
    degree = rng.randint(1, max(1, max_degree))
    if field.is_prime_field:
        tail = [rng.randrange(field.characteristic) for _ in range(degree)]
    else:
        from fractions import Fraction
        tail = [Fraction(rng.randint(-2, 2)) for _ in range(degree)]
    return poly_quotient(field, tail)


def _involution_candidates(r: GradedAlgebra) -> List[List[List[Scalar]]]:
    """Order-<=2 automorphism candidates for small polynomial quotients."""
    f = r.field
    n = r.dim
    out = []
    # x -> -x (valid when f(-x) = f(x))
    neg = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        neg[i][i] = f.one if i % 2 == 0 else f.neg(f.one)
    out.append(neg)
    # x -> 1 - x (valid for k[x]/(x^2 - x), swapping the idempotents)
    if n == 2:
        swap = [[f.one, f.one], [f.zero, f.neg(f.one)]]
        out.append(swap)
    return out


def random_graded_algebra(seed: int, max_dim: int = 8, max_group: int = 6,
                          field: Field = QQ) -> GradedAlgebra:
    """A reproducible random member of the closed builder zoo (always valid)."""
    rng = random.Random(seed)
    group = _random_group(rng, max_group)
    a = _random_over_group(rng, field, group, max_dim)
    for _ in range(2):
        roll = rng.random()
        if roll < 0.25 and a.group.order > 1:
            gens = [rng.randrange(a.group.order) for _ in range(rng.randint(1, 2))]
            subset = subgroup_closure(a.group, gens)
            if 1 < len(subset) < a.group.order or (len(subset) == 1 and rng.random() < 0.3):
                a = restrict_to_subgroup(a, subset)
        elif roll < 0.5 and a.group.order > 1:
            gens = [rng.randrange(a.group.order) for _ in range(rng.randint(1, 2))]
            subset = subgroup_closure(a.group, gens)
            if is_normal(a.group, subset):
                a = coarsen_grading(a, subset)
    return a


@dataclass(frozen=True)
class ConstructionSpec:
    """A named builder plus its parameters, all as strings (CLI-shaped)."""

    name: str
    parameters: Dict[str, str] = dc_field(default_factory=dict)


def build_construction(spec: ConstructionSpec) -> GradedAlgebra:
    """Instantiate a zoo builder from a name and a parameter map."""
    from .fileformat import parse_group_spec
    from .scalars import parse_field
    params = dict(spec.parameters)
    field = parse_field(params.pop("field", "Q"))

    def group_of(text: str) -> FiniteGroup:
        group, leftover = parse_group_spec(text.split())
        if leftover:
            raise AlgebraError(f"trailing tokens in group spec: {leftover}")
        return group

    name = spec.name
    if name == "group-algebra":
        return group_algebra(field, group_of(params.pop("group")))
    if name == "nakayama-nesbitt":
        return nakayama_nesbitt(field, field.parse(params.pop("u", "1")),
                                field.parse(params.pop("v", "1")))
    if name == "trivial-extension":
        return trivial_extension(named_base_algebra(params.pop("base", "kx2"), field))
    if name == "split-trivial-extension":
        return trivial_extension_split(
            named_base_algebra(params.pop("base1", "k"), field),
            named_base_algebra(params.pop("base2", "k"), field),
            group_of(params.pop("group", "cyclic 3")),
            int(params.pop("deg1", "1")), int(params.pop("deg2", "2")))
    if name == "matrix-good":
        group = group_of(params.pop("group"))
        degrees = [int(t) for t in params.pop("degrees").split(",")]
        return matrix_good_grading(field, int(params.pop("n", "2")), group, degrees)
    if name == "matrix-fine":
        return matrix_fine_grading(field, int(params.pop("n", "2")))
    if name == "skew-group":
        base = named_base_algebra(params.pop("base", "kxk"), field)
        group = group_of(params.pop("group", "cyclic 2"))
        action_name = params.pop("action", "identity")
        if action_name == "identity":
            action = identity_action(base, group)
        else:
            candidates = _involution_candidates(base)
            pick = 0 if action_name == "negate-x" else 1
            if action_name not in ("negate-x", "swap") or pick >= len(candidates):
                raise AlgebraError(f"action {action_name!r} unavailable for this base")
            action = [identity_action(base, group)[0]] + \
                [candidates[pick]] * (group.order - 1)
        return skew_group_algebra(base, group, action)
    if name == "matrix-over":
        base = named_base_algebra(params.pop("base"), field)
        return matrix_over(base, int(params.pop("n", "2")))
    if name == "random":
        return random_graded_algebra(int(params.pop("seed", "0")),
                                     int(params.pop("max-dim", "8")),
                                     int(params.pop("max-group", "6")), field)
    raise AlgebraError(f"unknown builder {name!r}")


def _random_over_group(rng: random.Random, field: Field, group: FiniteGroup,
                       max_dim: int) -> GradedAlgebra:
    options = []
    if group.order <= max_dim:
        options.append("group_algebra")
        options.append("skew")
    if 4 <= max_dim:
        options.append("good_matrix")
    if group.order == 2 and 2 <= max_dim:
        options.extend(["trivial_extension"] * 3)
    options.append("plain")
    if group.is_abelian() and max_dim >= 4:
        options.append("tensor")
    pick = rng.choice(options)
    if pick == "group_algebra":
        return group_algebra(field, group)
    if pick == "good_matrix":
        degrees = [rng.randrange(group.order) for _ in range(2)]
        return matrix_good_grading(field, 2, group, degrees)
    if pick == "trivial_extension":
        r = _random_poly_quotient(rng, field, max_dim // 2)
        return trivial_extension(r)
    if pick == "skew":
        budget = max(1, max_dim // group.order)
        r = _random_poly_quotient(rng, field, budget)
        action = identity_action(r, group)
        if group.order == 2 and rng.random() < 0.6:
            for cand in _involution_candidates(r):
                trial = [action[0], cand]
                if not validate_action(r, group, trial):
                    action = trial
                    break
        return skew_group_algebra(r, group, action)
    if pick == "tensor":
        left = _random_over_group(rng, field, group, max_dim // 2)
        right_budget = max(1, max_dim // max(1, left.dim))
        right = _random_over_group(rng, field, group, right_budget)
        try:
            return tensor_product(left, right)
        except AlgebraError:
            return left
    plain = _random_poly_quotient(rng, field, max_dim)
    return GradedAlgebra(field, group, plain.dim, (group.neutral,) * plain.dim,
                         plain.sc, plain.unit, name=plain.name)
