"""Line-oriented text format for algebras and certificates.

Algebra files ('#' starts a comment):

    field Q | field F<p>
    group cyclic <n> | group product <spec> x <spec> | group table <n> <n^2 ints>
    dim <d>
    deg <i> <element-index>     (default degree: neutral, when omitted)
    unit <d scalars>
    sc <i> <j> <k> <scalar>     (sparse; omitted entries are zero)

Certificates are key-value lines in fixed order: kind, sigma, field, then
payload rows.  All rationals render bit-exactly as "a" or "a/b".
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .algebra import GradedAlgebra, validate_algebra
from .frobenius import Certificate
from .groups import FiniteGroup, GroupError, make_cyclic, make_from_table, make_product, render_group
from .linalg import matrix
from .scalars import Field, ScalarError, parse_field


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_group_spec(tokens: List[str], line: Optional[int] = None) -> Tuple[FiniteGroup, List[str]]:
    """Recursive-descent parse of a group spec; returns (group, leftover tokens)."""
    if not tokens:
        raise ParseError("empty group spec", line)
    head, rest = tokens[0], tokens[1:]
    if head == "cyclic":
        if not rest:
            raise ParseError("cyclic needs an order", line)
        try:
            n = int(rest[0])
        except ValueError:
            raise ParseError(f"bad cyclic order {rest[0]!r}", line) from None
        if n < 1:
            raise ParseError("cyclic order must be >= 1", line)
        return make_cyclic(n), rest[1:]
    if head == "product":
        left, rest = parse_group_spec(rest, line)
        if not rest or rest[0] != "x":
            raise ParseError("product needs 'x' between factors", line)
        right, rest = parse_group_spec(rest[1:], line)
        return make_product(left, right), rest
    if head == "table":
        if not rest:
            raise ParseError("table needs an order", line)
        try:
            n = int(rest[0])
        except ValueError:
            raise ParseError(f"bad table order {rest[0]!r}", line) from None
        need = n * n
        entries = rest[1:1 + need]
        if len(entries) != need:
            raise ParseError(f"table needs {need} entries, got {len(entries)}", line)
        try:
            values = [int(x) for x in entries]
        except ValueError:
            raise ParseError("table entries must be integers", line) from None
        rows = [values[i * n:(i + 1) * n] for i in range(n)]
        try:
            return make_from_table(n, rows), rest[1 + need:]
        except GroupError as exc:
            raise ParseError(f"invalid group table: {exc}", line) from None
    raise ParseError(f"unknown group spec {head!r}", line)


def parse_algebra_text(text: str) -> GradedAlgebra:
    """Parse and fully validate an algebra file; diagnostics carry line numbers."""
    field: Optional[Field] = None
    group: Optional[FiniteGroup] = None
    dim: Optional[int] = None
    deg_entries = {}
    unit = None
    sc_entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "field":
            if len(tokens) != 2:
                raise ParseError("field takes one literal", lineno)
            try:
                field = parse_field(tokens[1])
            except ScalarError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "group":
            group, leftover = parse_group_spec(tokens[1:], lineno)
            if leftover:
                raise ParseError(f"trailing tokens after group spec: {leftover}", lineno)
        elif key == "dim":
            if len(tokens) != 2:
                raise ParseError("dim takes one integer", lineno)
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[1]!r}", lineno) from None
            if dim < 1:
                raise ParseError("dimension must be >= 1", lineno)
        elif key == "deg":
            if len(tokens) != 3:
                raise ParseError("deg takes <basis index> <element index>", lineno)
            try:
                i, d = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("deg arguments must be integers", lineno) from None
            deg_entries[i] = (d, lineno)
        elif key == "unit":
            if field is None or dim is None:
                raise ParseError("unit must come after field and dim", lineno)
            if len(tokens) != 1 + dim:
                raise ParseError(f"unit needs {dim} scalars", lineno)
            try:
                unit = tuple(field.parse(t) for t in tokens[1:])
            except ScalarError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "sc":
            if field is None:
                raise ParseError("sc must come after field", lineno)
            if len(tokens) != 5:
                raise ParseError("sc takes <i> <j> <k> <scalar>", lineno)
            try:
                i, j, k = int(tokens[1]), int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("sc indices must be integers", lineno) from None
            try:
                value = field.parse(tokens[4])
            except ScalarError as exc:
                raise ParseError(str(exc), lineno) from None
            sc_entries.append((i, j, k, value, lineno))
        else:
            raise ParseError(f"unknown declaration {key!r}", lineno)
    if field is None:
        raise ParseError("missing field declaration")
    if group is None:
        raise ParseError("missing group declaration")
    if dim is None:
        raise ParseError("missing dim declaration")
    if unit is None:
        raise ParseError("missing unit line")
    deg = [group.neutral] * dim
    for i, (d, lineno) in deg_entries.items():
        if not 0 <= i < dim:
            raise ParseError(f"deg index {i} out of range for dim {dim}", lineno)
        if not 0 <= d < group.order:
            raise ParseError(f"degree {d} is not a group element", lineno)
        deg[i] = d
    sc = {}
    for i, j, k, value, lineno in sc_entries:
        for idx in (i, j, k):
            if not 0 <= idx < dim:
                raise ParseError(f"sc index {idx} out of range for dim {dim}", lineno)
        sc.setdefault((i, j), {})
        if k in sc[(i, j)]:
            raise ParseError(f"duplicate sc entry for ({i},{j},{k})", lineno)
        sc[(i, j)][k] = value
    algebra = GradedAlgebra(field, group, dim, tuple(deg), sc, unit)
    problems = validate_algebra(algebra)
    if problems:
        raise ParseError("algebra invalid: " + "; ".join(problems[:6]))
    return algebra


def render_algebra(a: GradedAlgebra) -> str:
    lines = []
    if a.name:
        lines.append(f"# {a.name}")
    lines.append(f"field {a.field}")
    lines.append(f"group {render_group(a.group)}")
    lines.append(f"dim {a.dim}")
    for i in range(a.dim):
        lines.append(f"deg {i} {a.deg[i]}")
    lines.append("unit " + " ".join(a.field.render(v) for v in a.unit))
    for (i, j) in sorted(a.sc):
        for k in sorted(a.sc[(i, j)]):
            lines.append(f"sc {i} {j} {k} {a.field.render(a.sc[(i, j)][k])}")
    return "\n".join(lines) + "\n"


def render_certificate(cert: Certificate) -> str:
    lines = [f"kind {cert.kind}", f"sigma {cert.sigma}", f"field {cert.field}"]
    if cert.payload_matrix is not None:
        for row in cert.payload_matrix.data:
            lines.append("row " + " ".join(cert.field.render(v) for v in row))
    elif cert.payload_vector is not None:
        lines.append("row " + " ".join(cert.field.render(v) for v in cert.payload_vector))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    kind = sigma = field = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "kind":
            if len(tokens) != 2 or tokens[1] not in ("iso_matrix", "bilinear_form",
                                                     "trace_functional"):
                raise ParseError(f"bad certificate kind", lineno)
            kind = tokens[1]
        elif key == "sigma":
            try:
                sigma = int(tokens[1])
            except (IndexError, ValueError):
                raise ParseError("sigma must be an integer", lineno) from None
        elif key == "field":
            try:
                field = parse_field(tokens[1])
            except (IndexError, ScalarError) as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "row":
            if field is None:
                raise ParseError("row must come after field", lineno)
            try:
                rows.append([field.parse(t) for t in tokens[1:]])
            except ScalarError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown certificate line {key!r}", lineno)
    if kind is None or sigma is None or field is None:
        raise ParseError("certificate needs kind, sigma and field lines")
    if not rows:
        raise ParseError("certificate has no payload rows")
    if kind == "trace_functional":
        if len(rows) != 1:
            raise ParseError("trace functional takes a single payload row")
        return Certificate(kind, sigma, field, payload_vector=rows[0])
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("payload rows have inconsistent lengths")
    return Certificate(kind, sigma, field,
                       payload_matrix=matrix(field, rows, cols=width))
