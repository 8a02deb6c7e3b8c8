"""Graded morphism spaces, isomorphism testing, and the coinduced module.

Hom spaces are computed as kernels of the linear system "commute with every
basis action, vanish between unequal degrees".  For a free cyclic source
(the regular module or one of its suspensions) the hom space has a closed
form — every morphism is determined by the image of the generator — and the
solver is bypassed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import (AlgebraError, GradedAlgebra, GradedLinearMap, GradedModule,
                      degree_e_subalgebra, module_degree_component, suspend_left)
from .linalg import (Budget, Matrix, generic_invertible, kernel_of_rows, matrix,
                     matvec, rank, solve_rows)
from .scalars import Scalar


def morphism_violations(lmap: GradedLinearMap) -> List[str]:
    """Deterministic re-check that a map is a degree-preserving module morphism."""
    m, n, t = lmap.source, lmap.target, lmap.matrix
    f = m.algebra.field
    out = []
    if t.rows != n.dim or t.cols != m.dim:
        return [f"matrix shape {t.rows}x{t.cols} does not match modules"]
    for l in range(n.dim):
        for k in range(m.dim):
            if not f.is_zero(t.data[l][k]) and n.deg[l] != m.deg[k]:
                out.append(f"entry ({l},{k}) crosses degrees {n.deg[l]} != {m.deg[k]}")
    for i in range(m.algebra.dim):
        for j in range(m.dim):
            acted = [f.zero] * m.dim
            col = m.act.get((i, j))
            if col:
                for k, v in col.items():
                    acted[k] = v
            lhs = matvec(t, acted)
            rhs = n.apply(i, t.column(j))
            if lhs != rhs:
                out.append(f"does not commute with action of b{i} on m{j}")
                if len(out) > 8:
                    return out
    return out


def _free_hom_basis(m: GradedModule, n: GradedModule) -> List[GradedLinearMap]:
    f = m.algebra.field
    d_u = m.free_unit_degree()
    maps = []
    for k in n.component_indices(d_u):
        data = [[f.zero] * m.dim for _ in range(n.dim)]
        for j in range(m.dim):
            col = n.act.get((j, k))
            if col:
                for l, v in col.items():
                    data[l][j] = v
        maps.append(GradedLinearMap(m, n, matrix(f, data, cols=m.dim)))
    return maps


def graded_hom_basis(m: GradedModule, n: GradedModule,
                     allow_free_path: bool = True) -> List[GradedLinearMap]:
    """Basis of the space of degree-preserving module morphisms m -> n."""
    if m.side != n.side:
        raise AlgebraError("hom requires modules on the same side")
    if m.algebra != n.algebra:
        raise AlgebraError("hom requires modules over the same algebra")
    if allow_free_path and m.free_unit is not None and m.dim == m.algebra.dim:
        return _free_hom_basis(m, n)
    f = m.algebra.field
    pos: Dict[Tuple[int, int], int] = {}
    for l in range(n.dim):
        for k in range(m.dim):
            if n.deg[l] == m.deg[k]:
                pos[(l, k)] = len(pos)
    nvars = len(pos)
    if nvars == 0:
        return []
    rows = []
    for i in range(m.algebra.dim):
        # target-side action of b_i, regrouped by output coordinate
        by_out: Dict[int, List[Tuple[int, Scalar]]] = {}
        for k2 in range(n.dim):
            col = n.act.get((i, k2))
            if col:
                for l, v in col.items():
                    by_out.setdefault(l, []).append((k2, v))
        for j in range(m.dim):
            src = m.act.get((i, j), {})
            for l in range(n.dim):
                row = [f.zero] * nvars
                nonzero = False
                for k, v in src.items():
                    idx = pos.get((l, k))
                    if idx is not None:
                        row[idx] = f.add(row[idx], v)
                        nonzero = True
                for k2, v in by_out.get(l, ()):
                    idx = pos.get((k2, j))
                    if idx is not None:
                        row[idx] = f.sub(row[idx], v)
                        nonzero = True
                if nonzero:
                    rows.append(row)
    kernel = kernel_of_rows(f, rows, nvars) if rows else \
        [[f.one if t == s else f.zero for s in range(nvars)] for t in range(nvars)]
    maps = []
    for vec in kernel:
        data = [[f.zero] * m.dim for _ in range(n.dim)]
        for (l, k), idx in pos.items():
            data[l][k] = vec[idx]
        maps.append(GradedLinearMap(m, n, matrix(f, data, cols=m.dim)))
    return maps


@dataclass
class IsoVerdict:
    outcome: str                     # "yes" | "no"
    certified: bool
    witness: Optional[GradedLinearMap] = None
    error_bound: Optional[Fraction] = None
    reason: str = ""
    trials_used: int = 0

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"


def graded_iso(m: GradedModule, n: GradedModule, budget: Optional[Budget] = None,
               rng: Optional[random.Random] = None) -> IsoVerdict:
    """Decide isomorphism in the graded module category, with a witness or
    a certified/probabilistic refutation."""
    if m.side != n.side:
        raise AlgebraError("isomorphism test requires modules on the same side")
    if m.algebra != n.algebra:
        raise AlgebraError("isomorphism test requires modules over the same algebra")
    if m.component_dims() != n.component_dims():
        return IsoVerdict("no", True, reason="component_dim_mismatch")
    if m.dim == 0:
        witness = GradedLinearMap(m, n, matrix(m.algebra.field, [], cols=0))
        return IsoVerdict("yes", True, witness)
    homs = graded_hom_basis(m, n)
    if not homs:
        return IsoVerdict("no", True, reason="determinant_zero_certified")
    verdict = generic_invertible([h.matrix for h in homs], budget, rng)
    if verdict.found:
        witness = GradedLinearMap(m, n, verdict.witness)
        problems = morphism_violations(witness)
        if problems or rank(verdict.witness) != m.dim:
            raise AssertionError(f"isomorphism witness failed re-validation: {problems}")
        return IsoVerdict("yes", True, witness, trials_used=verdict.trials_used)
    if verdict.outcome == "certified_absent":
        return IsoVerdict("no", True, reason="determinant_zero_certified")
    return IsoVerdict("no", False, error_bound=verdict.error_bound,
                      reason="probabilistic", trials_used=verdict.trials_used)


# ---------------------------------------------------------------------------
# Coinduction

@dataclass
class CoinducedModule:
    """Hom_{A_e}(A, N) with its natural grading and left A-action.

    Basis vectors are A_e-linear maps A -> N supported on a single degree
    column block; ``maps`` holds them as (N.dim x A.dim) matrices.
    """

    module: GradedModule
    maps: List[Matrix]
    subalgebra: GradedAlgebra
    subalgebra_indices: List[int]
    component_positions: Dict[int, List[int]]  # column degree -> basis positions


def _component_hom_maps(a: GradedAlgebra, n: GradedModule, idxs: List[int],
                        cols: List[int]) -> List[List[List[Scalar]]]:
    """Basis of A_e-linear maps A_h -> N, as dense (N.dim x len(cols)) tables."""
    f = a.field
    ncols = len(cols)
    local = {g: c for c, g in enumerate(cols)}
    nvars = n.dim * ncols
    if nvars == 0:
        return []

    def var(nn: int, c: int) -> int:
        return nn * ncols + c

    rows = []
    for ae_local, i in enumerate(idxs):
        for c, a_global in enumerate(cols):
            prod = a.sc.get((i, a_global), {})
            for out in range(n.dim):
                row = [f.zero] * nvars
                nonzero = False
                for k, w in prod.items():
                    row[var(out, local[k])] = f.add(row[var(out, local[k])], w)
                    nonzero = nonzero or not f.is_zero(w)
                for mm in range(n.dim):
                    col = n.act.get((ae_local, mm))
                    if col and out in col:
                        row[var(mm, c)] = f.sub(row[var(mm, c)], col[out])
                        nonzero = True
                if nonzero:
                    rows.append(row)
    kernel = kernel_of_rows(f, rows, nvars) if rows else \
        [[f.one if t == s else f.zero for s in range(nvars)] for t in range(nvars)]
    tables = []
    for vec in kernel:
        tables.append([[vec[var(nn, c)] for c in range(ncols)] for nn in range(n.dim)])
    return tables


def coinduce(a: GradedAlgebra, n: GradedModule) -> CoinducedModule:
    """The coinduced graded left module of an A_e-module: A_e-linear maps A -> N,
    graded so that degree-g maps vanish off the degree-g^-1 columns, with A
    acting through right multiplication on the argument."""
    subalg, idxs = degree_e_subalgebra(a)
    if n.side != "left" or n.algebra != subalg:
        raise AlgebraError("coinduce requires a left module over the degree-e subalgebra")
    f, g = a.field, a.group
    comp_cols = {h: a.component_indices(h) for h in a.support()}
    comp_tables: Dict[int, List] = {}
    positions: Dict[int, List[int]] = {}
    degrees: List[int] = []
    maps: List[Matrix] = []
    for h in sorted(comp_cols):
        cols = comp_cols[h]
        tables = _component_hom_maps(a, n, idxs, cols)
        comp_tables[h] = (cols, tables)
        positions[h] = []
        for table in tables:
            data = [[f.zero] * a.dim for _ in range(n.dim)]
            for nn in range(n.dim):
                for c, a_global in enumerate(cols):
                    data[nn][a_global] = table[nn][c]
            positions[h].append(len(maps))
            degrees.append(g.inv(h))
            maps.append(matrix(f, data, cols=a.dim))
    total = len(maps)
    act = {}
    for u in range(a.dim):
        du = a.deg[u]
        for h, (cols, tables) in comp_tables.items():
            hp = g.mul(h, g.inv(du))
            tcols, ttables = comp_tables.get(hp, ([], []))
            for t_local, table in enumerate(tables):
                src_pos = positions[h][t_local]
                image = [[f.zero] * len(tcols) for _ in range(n.dim)]
                nonzero = False
                for c, a_global in enumerate(tcols):
                    prod = a.sc.get((a_global, u), {})
                    for k, w in prod.items():
                        c2 = cols.index(k)
                        for nn in range(n.dim):
                            val = f.mul(w, table[nn][c2])
                            if not f.is_zero(val):
                                image[nn][c] = f.add(image[nn][c], val)
                                nonzero = True
                if not nonzero:
                    continue
                coeffs = _express_in_component(f, ttables, image)
                col = {}
                for t2_local, cv in enumerate(coeffs):
                    if not f.is_zero(cv):
                        col[positions[hp][t2_local]] = cv
                if col:
                    act[(u, src_pos)] = col
    module = GradedModule("left", a, total, tuple(degrees), act)
    return CoinducedModule(module, maps, subalg, idxs, positions)


def _express_in_component(f, tables, image):
    """Coordinates of a hom-space element in the component basis."""
    if not tables:
        if any(not f.is_zero(v) for row in image for v in row):
            raise AssertionError("image lies outside the computed hom component")
        return []
    flat_image = [v for row in image for v in row]
    flats = [[v for row in t for v in row] for t in tables]
    rows = [[flat[r] for flat in flats] for r in range(len(flat_image))]
    sol = solve_rows(f, rows, len(tables), flat_image)
    if sol is None:
        raise AssertionError("image lies outside the computed hom component")
    return sol


def coinduction_unit(m: GradedModule, sigma: int) -> Tuple[GradedLinearMap, CoinducedModule]:
    """The canonical map from a left module into the sigma^-1-suspended
    coinduction of its degree-sigma component; its kernel is the largest
    graded submodule with zero degree-sigma component."""
    if m.side != "left":
        raise AlgebraError("coinduction_unit requires a left module")
    a = m.algebra
    g, f = a.group, a.field
    subalg, idxs = degree_e_subalgebra(a)
    n = module_degree_component(m, sigma, subalg, idxs)
    coind = coinduce(a, n)
    target = suspend_left(coind.module, g.inv(sigma))
    sigma_local = {j: t for t, j in enumerate(m.component_indices(sigma))}
    data = [[f.zero] * m.dim for _ in range(target.dim)]
    for j in range(m.dim):
        lam = m.deg[j]
        h = g.mul(sigma, g.inv(lam))
        cols = a.component_indices(h)
        if not cols:
            continue
        image = [[f.zero] * len(cols) for _ in range(n.dim)]
        nonzero = False
        for c, i in enumerate(cols):
            col = m.act.get((i, j))
            if not col:
                continue
            for k, v in col.items():
                image[sigma_local[k]][c] = v
                nonzero = nonzero or not f.is_zero(v)
        positions = coind.component_positions.get(h, [])
        tables = [[[coind.maps[p].data[nn][cg] for cg in cols] for nn in range(n.dim)]
                  for p in positions]
        coeffs = _express_in_component(f, tables, image) if (tables or nonzero) else []
        for t_local, cv in enumerate(coeffs):
            data[positions[t_local]][j] = cv
    lmap = GradedLinearMap(m, target, matrix(f, data, cols=m.dim))
    return lmap, coind
