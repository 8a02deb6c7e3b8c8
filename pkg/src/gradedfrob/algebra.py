"""Group-graded algebras and graded modules via sparse structure constants.

A ``GradedAlgebra`` stores, for each pair of basis indices, the coordinate
vector of their product; a ``GradedModule`` stores the action of each algebra
basis vector on each module basis vector.  Everything downstream (duals,
suspensions, hom spaces, Frobenius checks) is exact linear algebra over these
tensors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .groups import FiniteGroup, subgroup_as_group, quotient_group, trivial_group
from .linalg import Matrix, matrix, kernel_of_rows, rank
from .scalars import Field, Scalar

SC = Dict[Tuple[int, int], Dict[int, Scalar]]


class AlgebraError(ValueError):
    """Structural error in an algebra or module definition."""


def _clean(table: SC) -> SC:
    out: SC = {}
    for key, col in table.items():
        col = {k: v for k, v in col.items() if v != 0}
        if col:
            out[key] = col
    return out


@dataclass
class GradedAlgebra:
    field: Field
    group: FiniteGroup
    dim: int
    deg: tuple            # basis index -> group element index
    sc: SC                # (i, j) -> coordinates of b_i * b_j
    unit: tuple           # coordinates of 1
    name: str = ""

    def __post_init__(self):
        self.sc = _clean(self.sc)

    def product_coords(self, i: int, j: int) -> Dict[int, Scalar]:
        return self.sc.get((i, j), {})

    def multiply(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        f = self.field
        out = [f.zero] * self.dim
        for (i, j), col in self.sc.items():
            c = f.mul(x[i], y[j])
            if f.is_zero(c):
                continue
            for k, v in col.items():
                out[k] = f.add(out[k], f.mul(c, v))
        return out

    def left_mult_matrix(self, v: Sequence[Scalar]) -> Matrix:
        """Matrix of x -> v * x."""
        f = self.field
        cols = [[f.zero] * self.dim for _ in range(self.dim)]
        for (i, j), col in self.sc.items():
            if f.is_zero(v[i]):
                continue
            for k, w in col.items():
                cols[j][k] = f.add(cols[j][k], f.mul(v[i], w))
        return matrix(f, [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)],
                      cols=self.dim)

    def right_mult_matrix(self, v: Sequence[Scalar]) -> Matrix:
        """Matrix of x -> x * v."""
        f = self.field
        cols = [[f.zero] * self.dim for _ in range(self.dim)]
        for (i, j), col in self.sc.items():
            if f.is_zero(v[j]):
                continue
            for k, w in col.items():
                cols[i][k] = f.add(cols[i][k], f.mul(v[j], w))
        return matrix(f, [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)],
                      cols=self.dim)

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.deg)))

    def component_indices(self, g: int) -> List[int]:
        return [i for i in range(self.dim) if self.deg[i] == g]

    def component_dims(self) -> Dict[int, int]:
        dims = {g: 0 for g in self.group.elements()}
        for g in self.deg:
            dims[g] += 1
        return dims

    def is_invertible_element(self, v: Sequence[Scalar]) -> bool:
        return rank(self.left_mult_matrix(v)) == self.dim

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedAlgebra) and self.field == other.field
                and self.group == other.group and self.dim == other.dim
                and self.deg == other.deg and self.sc == other.sc
                and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self.dim, self.deg, self.unit))


@dataclass
class GradedModule:
    side: str             # "left" | "right"
    algebra: GradedAlgebra
    dim: int
    deg: tuple
    act: SC               # (algebra index i, module index j) -> coordinates
    # Set when basis m_j equals b_j acting on a distinguished free generator u
    # (regular modules and their suspensions); enables closed-form hom bases.
    free_unit: Optional[tuple] = None

    def __post_init__(self):
        self.act = _clean(self.act)

    def action_coords(self, i: int, j: int) -> Dict[int, Scalar]:
        return self.act.get((i, j), {})

    def apply(self, i: int, x: Sequence[Scalar]) -> List[Scalar]:
        """Action of algebra basis vector i on module coordinates x."""
        f = self.algebra.field
        out = [f.zero] * self.dim
        for j, xv in enumerate(x):
            if f.is_zero(xv):
                continue
            col = self.act.get((i, j))
            if not col:
                continue
            for k, v in col.items():
                out[k] = f.add(out[k], f.mul(xv, v))
        return out

    def component_indices(self, g: int) -> List[int]:
        return [j for j in range(self.dim) if self.deg[j] == g]

    def component_dims(self) -> Dict[int, int]:
        dims = {g: 0 for g in self.algebra.group.elements()}
        for g in self.deg:
            dims[g] += 1
        return dims

    def free_unit_degree(self) -> int:
        degrees = {self.deg[j] for j, v in enumerate(self.free_unit) if v != 0}
        if len(degrees) != 1:
            raise AlgebraError("free generator is not homogeneous")
        return degrees.pop()

    def data_equal(self, other: "GradedModule") -> bool:
        return (self.side == other.side and self.algebra == other.algebra
                and self.dim == other.dim and self.deg == other.deg
                and self.act == other.act)


@dataclass
class GradedLinearMap:
    source: GradedModule
    target: GradedModule
    matrix: Matrix  # target-dim x source-dim


# ---------------------------------------------------------------------------
# Validation

def validate_algebra(a: GradedAlgebra) -> List[str]:
    """All violated GradedAlgebra invariants; empty when the algebra is valid."""
    f, g = a.field, a.group
    out = []
    if len(a.deg) != a.dim:
        return [f"degree map has {len(a.deg)} entries for dimension {a.dim}"]
    if len(a.unit) != a.dim:
        return [f"unit vector has {len(a.unit)} entries for dimension {a.dim}"]
    for d in a.deg:
        if not 0 <= d < g.order:
            out.append(f"degree index {d} out of range for group of order {g.order}")
    for (i, j), col in a.sc.items():
        if not (0 <= i < a.dim and 0 <= j < a.dim):
            out.append(f"structure constant indices ({i},{j}) out of range")
            continue
        for k in col:
            if not 0 <= k < a.dim:
                out.append(f"structure constant target {k} out of range at ({i},{j})")
    if out:
        return out
    for (i, j), col in a.sc.items():
        want = g.mul(a.deg[i], a.deg[j])
        for k, v in col.items():
            if not f.is_zero(v) and a.deg[k] != want:
                out.append(f"grading violated: (b{i} b{j}) hits b{k} of degree "
                           f"{a.deg[k]}, expected {want}")
    for k, v in enumerate(a.unit):
        if not f.is_zero(v) and a.deg[k] != g.neutral:
            out.append(f"unit has a component of degree {a.deg[k]} at b{k}")
    basis = [[f.one if i == k else f.zero for k in range(a.dim)] for i in range(a.dim)]
    for j in range(a.dim):
        if a.multiply(a.unit, basis[j]) != basis[j]:
            out.append(f"unit fails as left identity on b{j}")
        if a.multiply(basis[j], a.unit) != basis[j]:
            out.append(f"unit fails as right identity on b{j}")
    zero = [f.zero] * a.dim
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.sc.get((i, j))
            for k in range(a.dim):
                left = zero[:]
                if ij:
                    for l, v in ij.items():
                        col = a.sc.get((l, k))
                        if col:
                            for t, w in col.items():
                                left[t] = f.add(left[t], f.mul(v, w))
                right = zero[:]
                jk = a.sc.get((j, k))
                if jk:
                    for l, v in jk.items():
                        col = a.sc.get((i, l))
                        if col:
                            for t, w in col.items():
                                right[t] = f.add(right[t], f.mul(v, w))
                if left != right:
                    out.append(f"associativity fails at triple ({i},{j},{k})")
                    if len(out) > 16:
                        return out
    return out


def validate_module(m: GradedModule) -> List[str]:
    a, f, g = m.algebra, m.algebra.field, m.algebra.group
    out = []
    if m.side not in ("left", "right"):
        return [f"unknown module side {m.side!r}"]
    if len(m.deg) != m.dim:
        return [f"degree map has {len(m.deg)} entries for dimension {m.dim}"]
    for (i, j), col in m.act.items():
        if not (0 <= i < a.dim and 0 <= j < m.dim):
            out.append(f"action indices ({i},{j}) out of range")
            continue
        for k in col:
            if not 0 <= k < m.dim:
                out.append(f"action target {k} out of range at ({i},{j})")
    if out:
        return out
    for (i, j), col in m.act.items():
        if m.side == "left":
            want = g.mul(a.deg[i], m.deg[j])
        else:
            want = g.mul(m.deg[j], a.deg[i])
        for k, v in col.items():
            if not f.is_zero(v) and m.deg[k] != want:
                out.append(f"module grading violated at action ({i},{j}) -> {k}")
    basis = [[f.one if i == k else f.zero for k in range(m.dim)] for i in range(m.dim)]
    for j in range(m.dim):
        acted = [f.zero] * m.dim
        for i, uv in enumerate(a.unit):
            if f.is_zero(uv):
                continue
            col = m.act.get((i, j))
            if col:
                for k, v in col.items():
                    acted[k] = f.add(acted[k], f.mul(uv, v))
        if acted != basis[j]:
            out.append(f"unit does not act as identity on m{j}")
    zero = [f.zero] * m.dim
    for i1 in range(a.dim):
        for i2 in range(a.dim):
            prod = a.sc.get((i1, i2)) if m.side == "left" else a.sc.get((i2, i1))
            for j in range(m.dim):
                stepwise = zero[:]
                inner = m.act.get((i2, j))
                if inner:
                    for k, v in inner.items():
                        col = m.act.get((i1, k))
                        if col:
                            for t, w in col.items():
                                stepwise[t] = f.add(stepwise[t], f.mul(v, w))
                direct = zero[:]
                if prod:
                    for l, v in prod.items():
                        col = m.act.get((l, j))
                        if col:
                            for t, w in col.items():
                                direct[t] = f.add(direct[t], f.mul(v, w))
                if stepwise != direct:
                    out.append(f"action associativity fails at ({i1},{i2},m{j})")
                    if len(out) > 16:
                        return out
    return out


# ---------------------------------------------------------------------------
# Module constructors

def regular_module(a: GradedAlgebra, side: str) -> GradedModule:
    """The algebra acting on itself by multiplication on the chosen side."""
    if side not in ("left", "right"):
        raise AlgebraError(f"unknown side {side!r}")
    if side == "left":
        act = {key: dict(col) for key, col in a.sc.items()}
    else:
        act = {(i, j): dict(col) for (j, i), col in a.sc.items()}
    return GradedModule(side, a, a.dim, a.deg, act, free_unit=a.unit)


def dual_module(m: GradedModule) -> GradedModule:
    """Dual-basis module on the opposite side; degree of delta_j is inv(deg j)."""
    g = m.algebra.group
    act: SC = {}
    for (i, l), col in m.act.items():
        for j, v in col.items():
            act.setdefault((i, j), {})[l] = v
    new_deg = tuple(g.inv(d) for d in m.deg)
    new_side = "right" if m.side == "left" else "left"
    return GradedModule(new_side, m.algebra, m.dim, new_deg, act)


def suspend_left(m: GradedModule, sigma: int) -> GradedModule:
    """Degree shift of a left module: old degree d becomes d * sigma^-1."""
    if m.side != "left":
        raise AlgebraError("suspend_left requires a left module")
    g = m.algebra.group
    new_deg = tuple(g.mul(d, g.inv(sigma)) for d in m.deg)
    return GradedModule("left", m.algebra, m.dim, new_deg,
                        {k: dict(col) for k, col in m.act.items()},
                        free_unit=m.free_unit)


def suspend_right(m: GradedModule, sigma: int) -> GradedModule:
    """Degree shift of a right module: old degree d becomes sigma^-1 * d."""
    if m.side != "right":
        raise AlgebraError("suspend_right requires a right module")
    g = m.algebra.group
    new_deg = tuple(g.mul(g.inv(sigma), d) for d in m.deg)
    return GradedModule("right", m.algebra, m.dim, new_deg,
                        {k: dict(col) for k, col in m.act.items()},
                        free_unit=m.free_unit)


# ---------------------------------------------------------------------------
# Algebra constructors

def tensor_product(a: GradedAlgebra, b: GradedAlgebra) -> GradedAlgebra:
    """Graded tensor product; requires elementwise commuting supports."""
    if a.field != b.field:
        raise AlgebraError("tensor factors must share the scalar field")
    if a.group != b.group:
        raise AlgebraError("tensor factors must share the grading group")
    g = a.group
    for s in a.support():
        for t in b.support():
            if g.mul(s, t) != g.mul(t, s):
                raise AlgebraError(
                    f"supports do not commute: elements {s} and {t}")
    f = a.field
    dim = a.dim * b.dim

    def enc(i: int, j: int) -> int:
        return i * b.dim + j

    deg = tuple(g.mul(a.deg[i], b.deg[j]) for i in range(a.dim) for j in range(b.dim))
    sc: SC = {}
    for (i, k), cola in a.sc.items():
        for (j, l), colb in b.sc.items():
            col = {}
            for u, va in cola.items():
                for v, vb in colb.items():
                    col[enc(u, v)] = f.mul(va, vb)
            sc[(enc(i, j), enc(k, l))] = col
    unit = [f.zero] * dim
    for i, ua in enumerate(a.unit):
        if f.is_zero(ua):
            continue
        for j, ub in enumerate(b.unit):
            if not f.is_zero(ub):
                unit[enc(i, j)] = f.mul(ua, ub)
    name = f"({a.name or 'A'})x({b.name or 'B'})"
    return GradedAlgebra(f, g, dim, deg, sc, tuple(unit), name)


def restrict_to_subgroup(a: GradedAlgebra, subset: Sequence[int]) -> GradedAlgebra:
    """Subalgebra spanned by components with degrees in a subgroup."""
    sub, embed = subgroup_as_group(a.group, subset)
    keep = [i for i in range(a.dim) if a.deg[i] in set(embed)]
    local = {i: t for t, i in enumerate(keep)}
    sub_index = {gidx: t for t, gidx in enumerate(embed)}
    sc: SC = {}
    for (i, j), col in a.sc.items():
        if i in local and j in local:
            sc[(local[i], local[j])] = {local[k]: v for k, v in col.items()}
    deg = tuple(sub_index[a.deg[i]] for i in keep)
    unit = tuple(a.unit[i] for i in keep)
    return GradedAlgebra(a.field, sub, len(keep), deg, sc, unit,
                         name=f"{a.name or 'A'}|H")


def coarsen_grading(a: GradedAlgebra, normal_subset: Sequence[int]) -> GradedAlgebra:
    """The same algebra graded by the quotient group (degrees become cosets)."""
    quot, projection = quotient_group(a.group, normal_subset)
    deg = tuple(projection[d] for d in a.deg)
    return GradedAlgebra(a.field, quot, a.dim, deg,
                         {k: dict(col) for k, col in a.sc.items()},
                         a.unit, name=f"{a.name or 'A'}/N")


def ungrade(a: GradedAlgebra) -> GradedAlgebra:
    """Forget the grading: the same algebra over the trivial group."""
    return GradedAlgebra(a.field, trivial_group(), a.dim, (0,) * a.dim,
                         {k: dict(col) for k, col in a.sc.items()},
                         a.unit, name=f"{a.name or 'A'}(ungraded)")


def degree_e_subalgebra(a: GradedAlgebra) -> Tuple[GradedAlgebra, List[int]]:
    """The neutral-component subalgebra, trivially graded; returns (A_e, indices)."""
    keep = a.component_indices(a.group.neutral)
    local = {i: t for t, i in enumerate(keep)}
    sc: SC = {}
    for (i, j), col in a.sc.items():
        if i in local and j in local:
            sc[(local[i], local[j])] = {local[k]: v for k, v in col.items()}
    deg = (0,) * len(keep)
    unit = tuple(a.unit[i] for i in keep)
    return GradedAlgebra(a.field, trivial_group(), len(keep), deg, sc, unit,
                         name=f"{a.name or 'A'}_e"), keep


def module_degree_component(m: GradedModule, sigma: int,
                            subalgebra: Optional[GradedAlgebra] = None,
                            indices: Optional[List[int]] = None) -> GradedModule:
    """Degree-sigma component of a left module, as a module over A_e."""
    if m.side != "left":
        raise AlgebraError("degree components are taken of left modules here")
    a = m.algebra
    if subalgebra is None:
        subalgebra, indices = degree_e_subalgebra(a)
    keep = m.component_indices(sigma)
    local = {j: t for t, j in enumerate(keep)}
    act: SC = {}
    for ae_local, i in enumerate(indices):
        for j in keep:
            col = m.act.get((i, j))
            if col:
                act[(ae_local, local[j])] = {local[k]: v for k, v in col.items()}
    # A trivially graded algebra is its own neutral component; the component
    # module is then the regular module itself and keeps its free generator.
    free_unit = None
    if (m.free_unit is not None and len(keep) == m.dim
            and len(indices) == a.dim == subalgebra.dim):
        free_unit = m.free_unit
    return GradedModule("left", subalgebra, len(keep), (0,) * len(keep), act,
                        free_unit=free_unit)


# ---------------------------------------------------------------------------
# Centralizers and graded division

def centralizer(a: GradedAlgebra, vectors: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """Basis of {x : xs = sx for every listed s}."""
    rows = []
    for s in vectors:
        left = a.left_mult_matrix(s)   # x -> s*x
        right = a.right_mult_matrix(s)  # x -> x*s
        for r in range(a.dim):
            row = [a.field.sub(right.data[r][c], left.data[r][c]) for c in range(a.dim)]
            if any(not a.field.is_zero(x) for x in row):
                rows.append(row)
    if not rows:
        f = a.field
        return [[f.one if i == j else f.zero for j in range(a.dim)] for i in range(a.dim)]
    return kernel_of_rows(a.field, rows, a.dim)


def center(a: GradedAlgebra) -> List[List[Scalar]]:
    f = a.field
    basis = [[f.one if i == k else f.zero for k in range(a.dim)] for i in range(a.dim)]
    return centralizer(a, basis)


def is_graded_division(a: GradedAlgebra, enumeration_limit: int = 10**6):
    """Decide whether every nonzero homogeneous element is invertible.

    Returns ("yes", None), ("no", witness coordinates), or ("unsupported", None)
    when neither thin components nor finite-field enumeration apply.
    """
    f = a.field
    components = {}
    for i, d in enumerate(a.deg):
        components.setdefault(d, []).append(i)
    if all(len(idxs) <= 1 for idxs in components.values()):
        for idxs in components.values():
            i = idxs[0]
            v = [f.one if k == i else f.zero for k in range(a.dim)]
            if not a.is_invertible_element(v):
                return "no", v
        return "yes", None
    if f.is_prime_field:
        p = f.characteristic
        if all(p ** len(idxs) <= enumeration_limit for idxs in components.values()):
            for idxs in components.values():
                for point in itertools.product(range(p), repeat=len(idxs)):
                    if not any(point):
                        continue
                    v = [f.zero] * a.dim
                    for i, c in zip(idxs, point):
                        v[i] = c
                    if not a.is_invertible_element(v):
                        return "no", v
            return "yes", None
    return "unsupported", None
