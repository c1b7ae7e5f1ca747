import random

from hypothesis import given, settings, strategies as st

from gradedk.snf import smith_normal_form


def det(m):
    # exact determinant by fraction-free-ish expansion (small matrices only)
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det(minor)
    return total


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def check_form(m):
    factors, u, v, d = smith_normal_form(m)
    rows, cols = len(m), len(m[0]) if m else 0
    # U m V = D exactly
    assert mat_mul(mat_mul(u, m), v) == d
    # D diagonal with the reported factors
    for i in range(rows):
        for j in range(cols):
            if i == j:
                assert d[i][j] == (factors[i] if i < len(factors) else 0)
            else:
                assert d[i][j] == 0
    # divisibility chain among nonzero factors
    nz = [f for f in factors if f]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert all(f >= 0 for f in factors)
    # transforms unimodular
    assert det(u) in (1, -1)
    assert det(v) in (1, -1)
    return factors


def test_known_small_cases():
    assert check_form([[2, 0], [0, 3]]) == [1, 6]
    assert check_form([[1, 0], [0, 1]]) == [1, 1]
    assert check_form([[0, 0], [0, 0]]) == [0, 0]
    assert check_form([[2, 4], [4, 8]]) == [2, 0]
    # 2x3 and 3x2 shapes
    check_form([[1, 2, 3], [4, 5, 6]])
    check_form([[1, 2], [3, 4], [5, 6]])


def test_textbook_example():
    factors = check_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    # d1 = gcd of all entries; product of factors = |det|
    assert factors[0] == 2
    d = det([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    prod = 1
    for f in factors:
        prod *= f
    assert prod == abs(d)


@settings(max_examples=250, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_random_3x3(m):
    factors = check_form(m)
    d = abs(det(m))
    prod = 1
    for f in factors:
        prod *= f
    assert prod == d  # invariant factors multiply to |det|


def test_random_rectangular():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        check_form(m)


def test_gcd_of_entries_is_first_factor():
    from math import gcd
    rng = random.Random(19)
    for _ in range(100):
        m = [[rng.randint(-30, 30) for _ in range(3)] for _ in range(3)]
        factors = smith_normal_form(m)[0]
        g = 0
        for row in m:
            for x in row:
                g = gcd(g, x)
        assert factors[0] == g
