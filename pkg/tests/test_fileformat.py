import pytest

from gradedk.constructors import (construct_group_ring, construct_quaternion,
                                  construct_symbol_algebra)
from gradedk.fields import FieldSpec
from gradedk.fileformat import (FormatError, dump_graded_algebra, format_field,
                                format_group, format_group_element,
                                load_graded_algebra, parse_field,
                                parse_graded_algebra, parse_group,
                                parse_group_element, save_graded_algebra)
from gradedk.groups import GradeGroup

Q = FieldSpec.rationals()

COMPLEX_NUMBERS = """
[algebra]
field = Q
group = Z/2
basis = one i
degrees = (0) (1)
unit = 1 0

[products]
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 -1
"""


def test_parse_field_round_trip():
    for text in ("Q", "GF(5)", "GF(2)"):
        assert format_field(parse_field(text)) == text
    with pytest.raises(FormatError):
        parse_field("R")


def test_parse_group_round_trip():
    for text in ("Z", "Z^2", "Z/4", "Z x Z/2", "Z^2 x Z/2 x Z/6", "trivial"):
        assert format_group(parse_group(text)) == text
    with pytest.raises(FormatError):
        parse_group("Z/2 + Z")


def test_parse_group_element():
    G = GradeGroup.fg_abelian(1, [2])
    g = parse_group_element(G, "(3,5)")
    assert g.coords == (3, 1)
    assert format_group_element(g) == "(3,1)"
    with pytest.raises(FormatError):
        parse_group_element(G, "3,5")


def test_parse_simple_algebra():
    g = parse_graded_algebra(COMPLEX_NUMBERS)
    assert g.dim == 2
    i = g.algebra.basis_element(1)
    assert (i * i) == -g.algebra.one
    assert g.degrees[1].coords == (1,)


def test_round_trip_is_canonical():
    g = parse_graded_algebra(COMPLEX_NUMBERS)
    text = dump_graded_algebra(g)
    g2 = parse_graded_algebra(text)
    assert dump_graded_algebra(g2) == text
    assert g2.algebra.products == g.algebra.products
    assert g2.degrees == g.degrees


def test_round_trip_quaternion_and_symbol():
    for g in (construct_quaternion(Q, -1, -1),
              construct_symbol_algebra(FieldSpec.prime_field(5), 2, 2, 3, 4)):
        text = dump_graded_algebra(g)
        g2 = parse_graded_algebra(text)
        assert dump_graded_algebra(g2) == text
        assert g2.algebra.products == g.algebra.products


def test_round_trip_table_group():
    g = construct_group_ring(Q, GradeGroup.symmetric_3())
    text = dump_graded_algebra(g)
    assert "[group-table]" in text
    g2 = parse_graded_algebra(text)
    assert dump_graded_algebra(g2) == text
    assert g2.group.table == g.group.table


def test_constructor_section():
    g = parse_graded_algebra("[construct]\nkind = quaternion\nfield = Q\n"
                             "a = -1\nb = -1\n")
    k = g.algebra.basis_element(3)
    assert k * k == -g.algebra.one
    with pytest.raises(FormatError):
        parse_graded_algebra("[construct]\nkind = octonion\nfield = Q\n")


def test_laurent_constructor_round_trip():
    t = parse_graded_algebra("[construct]\nkind = laurent\nfield = GF(5)\nstep = 2\n")
    text = dump_graded_algebra(t)
    t2 = parse_graded_algebra(text)
    assert dump_graded_algebra(t2) == text
    assert t2.has_component(t2.group.element((4,)))
    assert not t2.has_component(t2.group.element((1,)))


def test_error_positions():
    with pytest.raises(FormatError, match="line 1"):
        parse_graded_algebra("field = Q\n")
    bad_quad = COMPLEX_NUMBERS.replace("1 1 0 -1", "1 1 -1")
    with pytest.raises(FormatError, match="i j k value"):
        parse_graded_algebra(bad_quad)
    bad_index = COMPLEX_NUMBERS.replace("1 1 0 -1", "1 1 7 -1")
    with pytest.raises(FormatError, match="out of range"):
        parse_graded_algebra(bad_index)


def test_bad_degree_count_and_unit_length():
    with pytest.raises(FormatError, match="one degree per basis"):
        parse_graded_algebra(COMPLEX_NUMBERS.replace("degrees = (0) (1)",
                                                     "degrees = (0)"))
    with pytest.raises(FormatError, match="coordinates"):
        parse_graded_algebra(COMPLEX_NUMBERS.replace("unit = 1 0", "unit = 1"))


def test_grading_violation_rejected():
    # declare i in degree 0: then i*i = -1 is fine but e.g. 1*i breaks closure
    bad = COMPLEX_NUMBERS.replace("degrees = (0) (1)", "degrees = (1) (0)")
    with pytest.raises(FormatError, match="grading"):
        parse_graded_algebra(bad)


def test_gf_scalars_and_comments():
    text = """
# GF(3) dual-free commutative square
[algebra]
field = GF(3)   # inline comment
group = trivial
basis = e
degrees = ()
unit = 2

[products]
0 0 0 2
"""
    g = parse_graded_algebra(text)
    e = g.algebra.basis_element(0)
    assert e * e == e.scale(g.field.scalar(2))
    assert g.algebra.one == e.scale(g.field.scalar(2))


def test_load_save_files(tmp_path):
    g = construct_quaternion(Q, 2, 5)
    p = tmp_path / "quat.alg"
    save_graded_algebra(g, p)
    g2 = load_graded_algebra(p)
    assert g2.algebra.products == g.algebra.products
    assert g2.degrees == g.degrees
