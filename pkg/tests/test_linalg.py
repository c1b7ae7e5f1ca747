import random
from fractions import Fraction

import sympy

from gradedk import linalg
from gradedk.fields import FieldSpec

Q = FieldSpec.rationals()
F5 = FieldSpec.prime_field(5)


def rand_matrix(rng, field, rows, cols, height=6):
    return [[field.random_scalar(rng, height) for _ in range(cols)]
            for _ in range(rows)]


def test_rref_canonical_and_idempotent():
    rng = random.Random(1)
    for _ in range(50):
        m = rand_matrix(rng, Q, rng.randint(1, 5), rng.randint(1, 5))
        red, pivots = linalg.rref(m)
        again, pivots2 = linalg.rref(red)
        assert red == again and pivots == pivots2
        for row, c in zip(red, pivots):
            assert row[c] == 1
            # pivot columns are cleared elsewhere
            for other in red:
                if other is not row:
                    assert other[c] == 0


def test_solve_and_nullspace_agree():
    rng = random.Random(2)
    for field in (Q, F5):
        for _ in range(40):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            a = rand_matrix(rng, field, rows, cols)
            x = [field.random_scalar(rng) for _ in range(cols)]
            b = linalg.mat_vec(a, x)
            sol = linalg.solve(a, b)
            assert sol is not None
            assert linalg.mat_vec(a, sol) == b
            # nullspace vectors really annihilate
            for v in linalg.nullspace(a, field):
                assert all(not s for s in linalg.mat_vec(a, v))
            # rank-nullity
            assert linalg.rank(a) + len(linalg.nullspace(a, field)) == cols


def test_solve_inconsistent():
    a = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(0)]]
    assert linalg.solve(a, [Fraction(1), Fraction(2)]) is None


def test_inverse():
    rng = random.Random(3)
    for field in (Q, F5):
        count = 0
        while count < 20:
            a = rand_matrix(rng, field, 3, 3)
            inv = linalg.inverse(a, field)
            if inv is None:
                continue
            count += 1
            assert linalg.mat_mul(a, inv) == linalg.identity_matrix(field, 3)
            assert linalg.mat_mul(inv, a) == linalg.identity_matrix(field, 3)


def test_charpoly_against_sympy():
    rng = random.Random(4)
    x = sympy.symbols("x")
    for _ in range(25):
        n = rng.randint(1, 4)
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        got = linalg.charpoly(a, Q)
        sm = sympy.Matrix(n, n, lambda i, j: sympy.Rational(a[i][j]))
        want = sympy.Poly(sm.charpoly(x), x).all_coeffs()  # descending
        want = [Fraction(sympy.Rational(c)) for c in reversed(want)]
        assert got == want


def test_charpoly_gf():
    rng = random.Random(5)
    x = sympy.symbols("x")
    for _ in range(20):
        n = rng.randint(1, 4)
        ints = [[rng.randrange(5) for _ in range(n)] for _ in range(n)]
        a = [[F5.scalar(v) for v in row] for row in ints]
        got = linalg.charpoly(a, F5)
        sm = sympy.Matrix(ints)
        want = [int(c) % 5 for c in reversed(sympy.Poly(sm.charpoly(x), x).all_coeffs())]
        assert [g.v for g in got] == want


def test_poly_nth_root():
    # (x^2 + 3x + 1)^3 recovered
    p = [Fraction(1), Fraction(3), Fraction(1)]
    cube = linalg.poly_pow(p, 3, Q)
    assert linalg.poly_nth_root(cube, 3, Q) == p
    # x^3 + 1 is not the cube of a monic linear polynomial
    assert linalg.poly_nth_root([Fraction(1), Fraction(0), Fraction(0),
                                 Fraction(1)], 3, Q) is None


def test_poly_nth_root_gf():
    p = [F5.scalar(2), F5.scalar(1)]
    sq = linalg.poly_pow(p, 2, F5)
    assert linalg.poly_nth_root(sq, 2, F5) == p
    # char divides n: no root extraction
    assert linalg.poly_nth_root(linalg.poly_pow(p, 5, F5), 5, F5) is None


def test_row_space_contains():
    rows, _ = linalg.rref([[Fraction(1), Fraction(2), Fraction(0)],
                           [Fraction(0), Fraction(0), Fraction(1)]])
    assert linalg.row_space_contains(rows, [Fraction(2), Fraction(4), Fraction(7)])
    assert not linalg.row_space_contains(rows, [Fraction(0), Fraction(1), Fraction(0)])
