"""Finite groups as validated multiplication tables over indices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class GroupError(ValueError):
    """The supplied table violates a group axiom."""


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # tuple of row tuples, table[i][j] = i * j
    neutral: int
    inverse: tuple
    labels: Optional[tuple] = None  # rendering labels, e.g. "(1,0)" in products
    spec: Optional[str] = None      # text-format fragment this group round-trips to

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteGroup) and self.order == other.order
                and self.table == other.table and self.neutral == other.neutral)

    def __hash__(self):
        return hash((self.order, self.table, self.neutral))


def make_from_table(n: int, table: Sequence[Sequence[int]], neutral: Optional[int] = None,
                    labels: Optional[Sequence[str]] = None,
                    spec: Optional[str] = None) -> FiniteGroup:
    """Validate a multiplication table and build the group, or raise GroupError."""
    if n <= 0:
        raise GroupError("group order must be positive")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupError(f"table must be {n}x{n}")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    violations = []
    for i, row in enumerate(rows):
        for x in row:
            if not 0 <= x < n:
                violations.append(f"entry {x} in row {i} out of range [0,{n})")
    if violations:
        raise GroupError("; ".join(violations))
    for i in range(n):
        if len(set(rows[i])) != n:
            violations.append(f"row {i} is not a permutation (not a Latin square)")
        if len({rows[j][i] for j in range(n)}) != n:
            violations.append(f"column {i} is not a permutation (not a Latin square)")
    identity = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        violations.append("no two-sided identity element")
    elif neutral is not None and neutral != identity:
        violations.append(f"declared neutral {neutral} is not the identity (found {identity})")
    inverse = [None] * n
    if identity is not None:
        for a in range(n):
            for b in range(n):
                if rows[a][b] == identity and rows[b][a] == identity:
                    inverse[a] = b
                    break
            else:
                violations.append(f"element {a} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    violations.append(f"associativity fails at triple ({a},{b},{c})")
                    if len(violations) > 8:
                        raise GroupError("; ".join(violations))
    if violations:
        raise GroupError("; ".join(violations))
    return FiniteGroup(n, rows, identity, tuple(inverse),
                       tuple(labels) if labels else None, spec)


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inverse = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, table, 0, inverse, None, f"cyclic {n}")


def trivial_group() -> FiniteGroup:
    return make_cyclic(1)


def make_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product; element index = i_g * order(h) + i_h (mixed radix)."""
    n = g.order * h.order
    oh = h.order

    def enc(a: int, b: int) -> int:
        return a * oh + b

    table = tuple(
        tuple(enc(g.mul(a1, a2), h.mul(b1, b2)) for a2 in g.elements() for b2 in h.elements())
        for a1 in g.elements() for b1 in h.elements()
    )
    neutral = enc(g.neutral, h.neutral)
    inverse = tuple(enc(g.inv(a), h.inv(b)) for a in g.elements() for b in h.elements())
    labels = tuple(f"({g.label(a)},{h.label(b)})" for a in g.elements() for b in h.elements())
    spec = None
    if g.spec and h.spec:
        spec = f"product {g.spec} x {h.spec}"
    return FiniteGroup(n, table, neutral, inverse, labels, spec)


def subgroup_closure(g: FiniteGroup, generators: Sequence[int]) -> Tuple[int, ...]:
    """Sorted elements of the subgroup generated by ``generators``."""
    for x in generators:
        if not 0 <= x < g.order:
            raise GroupError(f"generator index {x} out of range")
    closure = {g.neutral}
    frontier = list(set(generators))
    closure.update(frontier)
    while frontier:
        x = frontier.pop()
        for y in list(closure):
            for z in (g.mul(x, y), g.mul(y, x), g.inv(x)):
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
    return tuple(sorted(closure))


def is_subgroup(g: FiniteGroup, subset: Sequence[int]) -> bool:
    elems = set(subset)
    if g.neutral not in elems:
        return False
    return all(g.mul(a, b) in elems and g.inv(a) in elems for a in elems for b in elems)


def is_normal(g: FiniteGroup, subset: Sequence[int]) -> bool:
    elems = set(subset)
    if not is_subgroup(g, subset):
        return False
    return all(g.mul(g.mul(x, h), g.inv(x)) in elems
               for x in g.elements() for h in elems)


def subgroup_as_group(g: FiniteGroup, subset: Sequence[int]) -> Tuple[FiniteGroup, List[int]]:
    """The subgroup on its own indices; returns (group, embedding into g)."""
    elems = sorted(set(subset))
    if not is_subgroup(g, elems):
        raise GroupError("subset is not closed under the group operations")
    index_of = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    table = [[index_of[g.mul(a, b)] for b in elems] for a in elems]
    labels = [g.label(x) for x in elems]
    return make_from_table(n, table, labels=labels), elems


def quotient_group(g: FiniteGroup, normal: Sequence[int]) -> Tuple[FiniteGroup, List[int]]:
    """The quotient by a normal subgroup; returns (group, projection index map)."""
    if not is_normal(g, normal):
        raise GroupError("subset is not a normal subgroup")
    nset = set(normal)
    seen = {}
    cosets: List[frozenset] = []
    projection = [None] * g.order
    for x in g.elements():
        coset = frozenset(g.mul(x, h) for h in nset)
        if coset not in seen:
            seen[coset] = len(cosets)
            cosets.append(coset)
        projection[x] = seen[coset]
    n = len(cosets)
    reps = [min(c) for c in cosets]
    table = [[projection[g.mul(reps[a], reps[b])] for b in range(n)] for a in range(n)]
    labels = ["{" + ",".join(g.label(x) for x in sorted(c)) + "}" for c in cosets]
    return make_from_table(n, table, labels=labels), projection


def render_group(g: FiniteGroup) -> str:
    """Text-format fragment for this group (falls back to an explicit table)."""
    if g.spec:
        return g.spec
    entries = " ".join(str(g.table[i][j]) for i in range(g.order) for j in range(g.order))
    return f"table {g.order} {entries}"
