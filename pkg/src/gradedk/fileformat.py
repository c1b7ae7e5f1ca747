"""Line-oriented definition files for graded algebras.

Sections are headed by [algebra], [products], [group-table], or [construct].
Scalars are integers or p/q rationals (GF(p) values are integers mod p);
grade-group elements are parenthesized integer tuples like (0,1), or a bare
index for table groups. Structure constants are sparse i j k value quadruples
meaning e_i * e_j contains value * e_k. The serializer is canonical: parsing
its output reproduces the same data.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra
from .constructors import (construct_group_ring, construct_laurent,
                           construct_quaternion, construct_symbol_algebra,
                           construct_truncated_polynomial)
from .fields import FieldSpec
from .graded import GradedAlgebra, TwistedGroupAlgebra, validate_grading
from .groups import GradeGroup


class FormatError(ValueError):
    pass


# -- low-level parsing -------------------------------------------------


def _sections(text):
    out = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            out.setdefault(current, [])
            continue
        if current is None:
            raise FormatError("line %d outside any section" % lineno)
        out[current].append((lineno, line))
    return out


def _keyvalues(lines):
    out = {}
    for lineno, line in lines:
        if "=" not in line:
            raise FormatError("line %d: expected key = value" % lineno)
        k, v = line.split("=", 1)
        out[k.strip().lower()] = v.strip()
    return out


def parse_field(text):
    t = text.strip()
    if t in ("Q", "q", "rationals"):
        return FieldSpec.rationals()
    if t.upper().startswith("GF(") and t.endswith(")"):
        return FieldSpec.prime_field(int(t[3:-1]))
    raise FormatError("unknown field %r" % text)


def format_field(field):
    return "Q" if field.kind == "rationals" else "GF(%d)" % field.order


def parse_group(text, table_lines=None):
    t = text.strip()
    if t in ("trivial", "1"):
        return GradeGroup.trivial()
    if t == "S3":
        return GradeGroup.symmetric_3()
    if t.startswith("D") and t[1:].isdigit():
        return GradeGroup.dihedral(int(t[1:]))
    if t == "table":
        if not table_lines:
            raise FormatError("group = table needs a [group-table] section")
        table = [[int(x) for x in line.split()] for _, line in table_lines]
        return GradeGroup.from_table(table)
    rank = 0
    torsion = []
    for part in t.split("x"):
        part = part.strip()
        try:
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z/"):
                torsion.append(int(part[2:]))
            else:
                raise ValueError
        except ValueError:
            raise FormatError("unknown group factor %r" % part) from None
    return GradeGroup.fg_abelian(rank, torsion)


def format_group(group):
    if group.kind == "finite-table":
        return "table"
    parts = []
    if group.rank == 1:
        parts.append("Z")
    elif group.rank > 1:
        parts.append("Z^%d" % group.rank)
    parts += ["Z/%d" % n for n in group.torsion]
    return " x ".join(parts) if parts else "trivial"


def _parse_scalar(field, token):
    return field.scalar(Fraction(token) if field.kind == "rationals" else token)


def parse_group_element(group, token):
    token = token.strip()
    if group.kind == "finite-table":
        return group.element(int(token))
    if not (token.startswith("(") and token.endswith(")")):
        raise FormatError("expected a parenthesized tuple, got %r" % token)
    inner = token[1:-1].strip()
    coords = [int(x) for x in inner.split(",")] if inner else []
    return group.element(coords)


def format_group_element(g):
    if g.group.kind == "finite-table":
        return str(g.coords)
    return "(" + ",".join(str(c) for c in g.coords) + ")"


# -- whole files -------------------------------------------------------


def parse_graded_algebra(text):
    """A GradedAlgebra (or TwistedGroupAlgebra) from definition text."""
    sections = _sections(text)
    if "construct" in sections:
        return _run_constructor(_keyvalues(sections["construct"]))
    if "algebra" not in sections:
        raise FormatError("missing [algebra] section")
    kv = _keyvalues(sections["algebra"])
    field = parse_field(kv["field"])
    group = parse_group(kv["group"], sections.get("group-table"))
    labels = kv["basis"].split()
    dim = len(labels)
    degree_tokens = _split_tuples(kv["degrees"])
    if len(degree_tokens) != dim:
        raise FormatError("need one degree per basis label")
    degrees = [parse_group_element(group, t) for t in degree_tokens]
    products = {}
    for lineno, line in sections.get("products", []):
        parts = line.split()
        if len(parts) != 4:
            raise FormatError("line %d: expected i j k value" % lineno)
        i, j, k = (int(p) for p in parts[:3])
        if not all(0 <= t < dim for t in (i, j, k)):
            raise FormatError("line %d: index out of range" % lineno)
        v = _parse_scalar(field, parts[3])
        products.setdefault((i, j), {})
        products[(i, j)][k] = products[(i, j)].get(k, field.zero) + v
    unit = None
    if "unit" in kv:
        unit = [_parse_scalar(field, t) for t in kv["unit"].split()]
        if len(unit) != dim:
            raise FormatError("unit needs %d coordinates" % dim)
    alg = Algebra(field, labels, products, unit=unit)
    g = GradedAlgebra(alg, group, degrees)
    v = validate_grading(g)
    if not v:
        raise FormatError("grading closure fails: %r" % (v.counterexample,))
    return g


def _split_tuples(text):
    """Split "(0,0) (1,0) 3" into top-level tokens."""
    out = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


def _run_constructor(kv):
    kind = kv["kind"]
    field = parse_field(kv["field"])
    if kind == "quaternion":
        return construct_quaternion(field, Fraction(kv["a"]), Fraction(kv["b"]),
                                    grading=kv.get("grading", "Z2xZ2"))
    if kind == "symbol":
        return construct_symbol_algebra(field, int(kv["n"]), Fraction(kv["a"]),
                                        Fraction(kv["b"]), Fraction(kv["xi"]))
    if kind == "laurent":
        return construct_laurent(field, step=int(kv.get("step", "1")))
    if kind == "group-ring":
        return construct_group_ring(field, parse_group(kv["group"]))
    if kind == "truncated":
        return construct_truncated_polynomial(field, int(kv["m"]))
    raise FormatError("unknown constructor %r" % kind)


def dump_graded_algebra(g):
    """Canonical definition text for a materialized GradedAlgebra."""
    if isinstance(g, TwistedGroupAlgebra):
        step = g.support.generators[0].coords[0] if g.support.generators else 0
        return "\n".join(["[construct]", "kind = laurent",
                          "field = %s" % format_field(g.field),
                          "step = %d" % abs(step), ""])
    alg = g.algebra
    lines = ["[algebra]",
             "field = %s" % format_field(alg.field),
             "group = %s" % format_group(g.group),
             "basis = %s" % " ".join(alg.labels),
             "degrees = %s" % " ".join(format_group_element(d) for d in g.degrees),
             "unit = %s" % " ".join(alg.field.format_scalar(c)
                                    for c in alg.unit_coords)]
    if g.group.kind == "finite-table":
        lines.append("[group-table]")
        for row in g.group.table:
            lines.append(" ".join(str(x) for x in row))
    lines.append("[products]")
    for (i, j) in sorted(alg.products):
        for k in sorted(alg.products[(i, j)]):
            lines.append("%d %d %d %s"
                         % (i, j, k, alg.field.format_scalar(alg.products[(i, j)][k])))
    lines.append("")
    return "\n".join(lines)


def load_graded_algebra(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graded_algebra(fh.read())


def save_graded_algebra(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_graded_algebra(g))
