"""Exact dense linear algebra, plus generic invertibility over a span of matrices.

Rank, kernel and solve run fraction-free over the rationals (integer rows,
cross-multiplication elimination with gcd pruning) and by modular elimination
over GF(p).  ``generic_invertible`` decides whether a linear span of square
matrices contains an invertible element, certifying the answer whenever an
exhaustive pass is affordable and otherwise falling back to randomized search
with a Schwartz-Zippel failure bound.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence

from .scalars import Field, Scalar


class LinalgError(ValueError):
    """Shape or field mismatch between operands."""


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    data: tuple  # tuple of row tuples, row-major

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise LinalgError("entry count does not match declared shape")

    def row(self, i: int) -> Sequence[Scalar]:
        return self.data[i]

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i][j]

    def column(self, j: int) -> List[Scalar]:
        return [self.data[i][j] for i in range(self.rows)]


def matrix(field: Field, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> Matrix:
    rows = [tuple(r) for r in rows]
    ncols = len(rows[0]) if rows else (cols if cols is not None else 0)
    return Matrix(field, len(rows), ncols, tuple(rows))


def identity(field: Field, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix(field, n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def zero_matrix(field: Field, rows: int, cols: int) -> Matrix:
    zero = field.zero
    return Matrix(field, rows, cols, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.field, m.cols, m.rows, tuple(zip(*m.data)) if m.data else ())


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise LinalgError("field mismatch in matmul")
    if a.cols != b.rows:
        raise LinalgError(f"shape mismatch in matmul: {a.rows}x{a.cols} * {b.rows}x{b.cols}")
    f = a.field
    if f.is_prime_field:
        p = f.characteristic
        out = tuple(
            tuple(sum(ra[k] * b.data[k][j] for k in range(a.cols)) % p for j in range(b.cols))
            for ra in a.data
        )
    else:
        out = tuple(
            tuple(sum((ra[k] * b.data[k][j] for k in range(a.cols)), Fraction(0)) for j in range(b.cols))
            for ra in a.data
        )
    return Matrix(f, a.rows, b.cols, out)


def matvec(m: Matrix, v: Sequence[Scalar]) -> List[Scalar]:
    if len(v) != m.cols:
        raise LinalgError("vector length does not match column count")
    f = m.field
    nonzero = [(k, vk) for k, vk in enumerate(v) if vk]
    if f.is_prime_field:
        p = f.characteristic
        return [sum(r[k] * vk for k, vk in nonzero) % p for r in m.data]
    zero = Fraction(0)
    out = []
    for r in m.data:
        acc = zero
        for k, vk in nonzero:
            rk = r[k]
            if rk:
                acc += rk * vk
        out.append(acc)
    return out


def _int_rows_from_scalars(rows: Sequence[Sequence[Scalar]]) -> List[List[int]]:
    # Per-row denominator clearing; row scaling preserves rank/kernel/solutions.
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([Fraction(x).numerator * (den // Fraction(x).denominator) for x in row])
    return out


def _gcd_reduce(row: List[int]) -> List[int]:
    g = 0
    for a in row:
        g = gcd(g, a)
        if g == 1:
            return row
    if g > 1:
        return [a // g for a in row]
    return row


def _rref_int(rows: List[List[int]], ncols: int):
    """Fraction-free reduced echelon form; returns (pivot columns, pivot rows)."""
    piv: List[tuple] = []  # (col, integer row); pivot entries need not be 1
    for row in rows:
        row = list(row)
        for c, prow in piv:
            f = row[c]
            if f:
                L = prow[c]
                row = [L * a - f * b for a, b in zip(row, prow)]
        lead = next((c for c in range(ncols) if row[c]), None)
        if lead is None:
            continue
        row = _gcd_reduce(row)
        if row[lead] < 0:
            row = [-a for a in row]
        L = row[lead]
        updated = []
        for c, prow in piv:
            f = prow[lead]
            if f:
                prow = _gcd_reduce([L * a - f * b for a, b in zip(prow, row)])
            updated.append((c, prow))
        updated.append((lead, row))
        piv = updated
    piv.sort()
    return [c for c, _ in piv], [r for _, r in piv]


def _rref_mod_p(rows: List[List[int]], ncols: int, p: int):
    """Gauss-Jordan mod p with unit pivots; returns (pivot columns, pivot rows)."""
    piv: List[tuple] = []
    for row in rows:
        row = [a % p for a in row]
        for c, prow in piv:
            f = row[c]
            if f:
                row = [(a - f * b) % p for a, b in zip(row, prow)]
        lead = next((c for c in range(ncols) if row[c]), None)
        if lead is None:
            continue
        inv = pow(row[lead], p - 2, p)
        row = [a * inv % p for a in row]
        updated = []
        for c, prow in piv:
            f = prow[lead]
            if f:
                prow = [(a - f * b) % p for a, b in zip(prow, row)]
            updated.append((c, prow))
        updated.append((lead, row))
        piv = updated
    piv.sort()
    return [c for c, _ in piv], [r for _, r in piv]


def _rref_scalar_rows(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int):
    if field.is_prime_field:
        return _rref_mod_p([list(r) for r in rows], ncols, field.characteristic)
    return _rref_int(_int_rows_from_scalars(rows), ncols)


def rank(m: Matrix) -> int:
    piv_cols, _ = _rref_scalar_rows(m.field, m.data, m.cols)
    return len(piv_cols)


def rank_of_rows(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    piv_cols, _ = _rref_scalar_rows(field, rows, ncols)
    return len(piv_cols)


def is_invertible(m: Matrix) -> bool:
    if m.rows != m.cols:
        return False
    return rank(m) == m.rows


def kernel_basis(m: Matrix) -> List[List[Scalar]]:
    """Basis of the right null space; empty iff the matrix has full column rank."""
    return kernel_of_rows(m.field, m.data, m.cols)


def kernel_of_rows(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int) -> List[List[Scalar]]:
    piv_cols, piv_rows = _rref_scalar_rows(field, rows, ncols)
    piv_set = set(piv_cols)
    free_cols = [c for c in range(ncols) if c not in piv_set]
    basis = []
    if field.is_prime_field:
        p = field.characteristic
        for fcol in free_cols:
            v = [0] * ncols
            v[fcol] = 1
            for c, row in zip(piv_cols, piv_rows):
                v[c] = -row[fcol] % p
            basis.append(v)
    else:
        for fcol in free_cols:
            v = [Fraction(0)] * ncols
            v[fcol] = Fraction(1)
            for c, row in zip(piv_cols, piv_rows):
                v[c] = Fraction(-row[fcol], row[c])
            basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """Some x with m x = b, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise LinalgError("right-hand side length does not match row count")
    return solve_rows(m.field, m.data, m.cols, b)


def solve_rows(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int,
               b: Sequence[Scalar]) -> Optional[List[Scalar]]:
    augmented = [list(r) + [bv] for r, bv in zip(rows, b)]
    piv_cols, piv_rows = _rref_scalar_rows(field, augmented, ncols + 1)
    if ncols in piv_cols:
        return None
    if field.is_prime_field:
        x = [0] * ncols
        for c, row in zip(piv_cols, piv_rows):
            x[c] = row[ncols]
    else:
        x = [Fraction(0)] * ncols
        for c, row in zip(piv_cols, piv_rows):
            x[c] = Fraction(row[ncols], row[c])
    return x


# ---------------------------------------------------------------------------
# Generic invertibility over a span of square matrices.

@dataclass
class Budget:
    """Search budget: randomized trials, Q sampling bound, exhaustive grid cap."""

    trials: int = 64
    sample_bound: Optional[int] = None  # defaults to 4*d over the rationals
    exhaustive_limit: int = 10**6


@dataclass
class GenericInvertibilityVerdict:
    outcome: str  # "witness_found" | "certified_absent" | "probabilistic_absent"
    coefficients: Optional[List[Scalar]] = None
    witness: Optional[Matrix] = None
    error_bound: Optional[Fraction] = None
    trials_used: int = 0

    @property
    def found(self) -> bool:
        return self.outcome == "witness_found"

    @property
    def certified(self) -> bool:
        return self.outcome in ("witness_found", "certified_absent")


def _int_matrix_rows(m: Matrix) -> tuple:
    """(integer row lists, scale factor) with scaled = scale * original."""
    if m.field.is_prime_field:
        p = m.field.characteristic
        return [[x % p for x in row] for row in m.data], 1
    den = 1
    for row in m.data:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return [[Fraction(x).numerator * (den // Fraction(x).denominator) for x in row]
            for row in m.data], den


def _combine_int(mats: List[List[List[int]]], coeffs: Sequence[int], d: int) -> List[List[int]]:
    out = [[0] * d for _ in range(d)]
    for a, mat in zip(coeffs, mats):
        if a == 0:
            continue
        for i in range(d):
            row, mrow = out[i], mat[i]
            for j in range(d):
                row[j] += a * mrow[j]
    return out


def _full_column_rank(rows: List[List[int]], ncols: int, p: int) -> bool:
    """Early-exit rank test: True as soon as ncols pivots are found."""
    piv: List[tuple] = []
    for row in rows:
        if p:
            row = [a % p for a in row]
            for c, prow in piv:
                f = row[c]
                if f:
                    row = [(a - f * b) % p for a, b in zip(row, prow)]
            lead = next((c for c in range(ncols) if row[c]), None)
            if lead is None:
                continue
            inv = pow(row[lead], p - 2, p)
            piv.append((lead, [a * inv % p for a in row]))
        else:
            row = list(row)
            for c, prow in piv:
                f = row[c]
                if f:
                    L = prow[c]
                    row = [L * a - f * b for a, b in zip(row, prow)]
            lead = next((c for c in range(ncols) if row[c]), None)
            if lead is None:
                continue
            piv.append((lead, _gcd_reduce(row)))
        if len(piv) == ncols:
            return True
    return False


def _int_rows_invertible(rows: List[List[int]], d: int, p: int) -> bool:
    if p:
        piv: List[tuple] = []
        for row in rows:
            row = [a % p for a in row]
            for c, prow in piv:
                f = row[c]
                if f:
                    row = [(a - f * b) % p for a, b in zip(row, prow)]
            lead = next((c for c in range(d) if row[c]), None)
            if lead is None:
                return False
            inv = pow(row[lead], p - 2, p)
            piv.append((lead, [a * inv % p for a in row]))
        return True
    piv = []
    for row in rows:
        row = list(row)
        for c, prow in piv:
            f = row[c]
            if f:
                L = prow[c]
                row = [L * a - f * b for a, b in zip(row, prow)]
        lead = next((c for c in range(d) if row[c]), None)
        if lead is None:
            return False
        piv.append((lead, _gcd_reduce(row)))
    return True


def _witness_from_int_coeffs(basis: List[Matrix], int_coeffs: Sequence[int],
                             scales: Sequence[int], trials_used: int) -> GenericInvertibilityVerdict:
    field = basis[0].field
    d = basis[0].rows
    if field.is_prime_field:
        coeffs = [c % field.characteristic for c in int_coeffs]
    else:
        coeffs = [Fraction(c * s) for c, s in zip(int_coeffs, scales)]
    zero = field.zero
    data = [[zero] * d for _ in range(d)]
    for a, mat in zip(coeffs, basis):
        if field.is_zero(a):
            continue
        for i in range(d):
            for j in range(d):
                data[i][j] = field.add(data[i][j], field.mul(a, mat.data[i][j]))
    witness = matrix(field, data, cols=d)
    if rank(witness) != d:
        raise AssertionError("generic_invertible produced a non-invertible witness")
    return GenericInvertibilityVerdict("witness_found", coeffs, witness, None, trials_used)


def generic_invertible(basis: Sequence[Matrix], budget: Optional[Budget] = None,
                       rng: Optional[random.Random] = None) -> GenericInvertibilityVerdict:
    """Decide whether the linear span of ``basis`` contains an invertible matrix.

    Certified outcomes come from a direct basis check, a common-kernel test,
    or exhaustive evaluation when the grid fits the budget; otherwise the
    verdict is probabilistic with a one-sided error bound
    (d / |sample set|)^trials on missing an existing witness.
    """
    if not basis:
        raise LinalgError("generic_invertible requires a non-empty basis")
    field = basis[0].field
    d = basis[0].rows
    for m in basis:
        if m.field != field:
            raise LinalgError("mixed fields in generic_invertible basis")
        if m.rows != d or m.cols != d:
            raise LinalgError("mixed shapes in generic_invertible basis")
    budget = budget or Budget()
    rng = rng or random.Random(0)
    nmats = len(basis)

    if d == 0:
        empty = matrix(field, [], cols=0)
        coeffs = [field.one] + [field.zero] * (nmats - 1)
        return GenericInvertibilityVerdict("witness_found", coeffs, empty, None, 0)

    int_mats, scales = [], []
    for m in basis:
        rows, scale = _int_matrix_rows(m)
        int_mats.append(rows)
        scales.append(scale)
    p = field.characteristic if field.is_prime_field else 0

    # Exhaustive feasibility: over GF(p), p^nmats points sweep the whole span;
    # otherwise a (d+1)-point grid per coordinate interpolates the degree-d
    # determinant polynomial (needs d+1 distinct field elements).
    if p and p**nmats <= budget.exhaustive_limit:
        sweep = itertools.product(range(p), repeat=nmats)
    elif (not p or p > d) and (d + 1) ** nmats <= budget.exhaustive_limit:
        sweep = itertools.product(range(d + 1), repeat=nmats)
    else:
        sweep = None

    # Basis matrices as cheap witness candidates.  When the exhaustive pass is
    # in reach, all of them are tested (the certified pre-pass applies only if
    # every basis matrix is singular); otherwise cap the scan, the randomized
    # phase finds witnesses just as fast.
    singles = nmats if sweep is not None else min(nmats, 8)
    for idx in range(singles):
        unit = [0] * nmats
        unit[idx] = 1
        if _int_rows_invertible(int_mats[idx], d, p):
            return _witness_from_int_coeffs(basis, unit, scales, 0)

    # Common right/left kernel of all basis matrices forces every combination
    # to be singular.
    stacked = [row for mat in int_mats for row in mat]
    if not _full_column_rank(stacked, d, p):
        return GenericInvertibilityVerdict("certified_absent")
    stacked_t = [[mat[i][j] for i in range(d)] for mat in int_mats for j in range(d)]
    if not _full_column_rank(stacked_t, d, p):
        return GenericInvertibilityVerdict("certified_absent")

    if sweep is not None:
        for point in sweep:
            if any(point):
                combo = _combine_int(int_mats, point, d)
                if _int_rows_invertible(combo, d, p):
                    return _witness_from_int_coeffs(basis, point, scales, 0)
        return GenericInvertibilityVerdict("certified_absent")

    # Randomized search.
    bound = budget.sample_bound if budget.sample_bound is not None else 4 * d
    sample_size = field.sample_set_size(bound)
    for t in range(budget.trials):
        if p:
            point = [rng.randrange(p) for _ in range(nmats)]
        else:
            point = [rng.randint(-bound, bound) for _ in range(nmats)]
        if any(point):
            combo = _combine_int(int_mats, point, d)
            if _int_rows_invertible(combo, d, p):
                return _witness_from_int_coeffs(basis, point, scales, t + 1)
    error_bound = Fraction(d, sample_size) ** budget.trials
    return GenericInvertibilityVerdict("probabilistic_absent", None, None,
                                       error_bound, budget.trials)
