"""Exact dense linear algebra over a field.

Matrices are lists of lists of field scalars (Fraction or GFElement); all
routines return canonical exact results. Row spaces are canonicalized via
reduced row echelon form so subspace equality is a data comparison.
"""

from __future__ import annotations


def zeros(field, rows, cols):
    z = field.zero
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity_matrix(field, n):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        ai = a[i]
        for j in range(cols):
            s = ai[0] * b[0][j]
            for k in range(1, inner):
                s = s + ai[k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, x):
    return [sum_scalars(row[k] * x[k] for k in range(len(x))) for row in a]


def sum_scalars(it):
    it = iter(it)
    s = next(it)
    for v in it:
        s = s + v
    return s


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(rows):
    """Reduced row echelon form with unit pivots; returns (rows, pivot_cols).

    Zero rows are dropped, so the result is the canonical basis of the row
    space.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a):
    return len(rref(a)[0])


def row_space_contains(echelon, vec):
    """Membership of vec in the row space given by canonical echelon rows."""
    v = list(vec)
    for row in echelon:
        c = next(i for i, x in enumerate(row) if x)
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def solve(a, b):
    """One solution of A x = b, or None if inconsistent."""
    rows = len(a)
    if rows == 0:
        return []
    cols = len(a[0])
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    zero = (b[0] - b[0]) if rows else None
    x = [zero] * cols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def nullspace(a, field):
    """Canonical basis (rows) of {x : A x = 0}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return rref(basis)[0]


def inverse(a, field):
    """Matrix inverse, or None if singular."""
    n = len(a)
    aug = [list(a[i]) + list(identity_matrix(field, n)[i]) for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def trace(a):
    return sum_scalars(a[i][i] for i in range(len(a)))


# -- polynomials ------------------------------------------------------
# Polynomials are coefficient lists in ascending degree order.


def poly_trim(p, zero):
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p if p else [zero]


def poly_mul(p, q, field):
    z = field.zero
    out = [z] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out, z)


def poly_pow(p, n, field):
    out = [field.one]
    for _ in range(n):
        out = poly_mul(out, p, field)
    return out


def poly_sub(p, q, field):
    z = field.zero
    n = max(len(p), len(q))
    p = list(p) + [z] * (n - len(p))
    q = list(q) + [z] * (n - len(q))
    return poly_trim([a - b for a, b in zip(p, q)], z)


def charpoly(a, field):
    """Characteristic polynomial det(xI - A), ascending coefficients.

    Hessenberg reduction followed by the leading-minor recurrence; valid over
    any field (divisions are only by nonzero field elements).
    """
    n = len(a)
    if n == 0:
        return [field.one]
    h = [list(row) for row in a]
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if h[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for i in range(j + 2, n):
            if h[i][j]:
                f = h[i][j] / h[j + 1][j]
                h[i] = [x - f * y for x, y in zip(h[i], h[j + 1])]
                for row in h:
                    row[j + 1] = row[j + 1] + f * row[i]
    # p_m = charpoly of the leading m x m block of the Hessenberg form
    polys = [[field.one]]
    for m in range(1, n + 1):
        term = poly_mul([-h[m - 1][m - 1], field.one], polys[m - 1], field)
        prod = field.one
        for i in range(1, m):
            prod = prod * h[m - i][m - i - 1]
            coeff = h[m - 1 - i][m - 1] * prod
            if coeff:
                term = poly_sub(term, [c * coeff for c in polys[m - 1 - i]], field)
        polys.append(term)
    return polys[n]


def poly_nth_root(p, n, field):
    """The monic q with q**n == p, or None.

    Requires char(field) not dividing n (coefficients are recovered by
    successive division by n).
    """
    if n == 1:
        return list(p)
    deg = len(p) - 1
    if deg % n or not p[-1] == field.one:
        return None
    m = deg // n
    n_scalar = field.scalar(n)
    if not n_scalar:
        return None
    q = [field.zero] * m + [field.one]
    for k in range(1, m + 1):
        # fix coefficient of x^(m-k) by matching degree n*m - k of q^n
        cur = poly_pow(q, n, field)
        target = p[deg - k] if deg - k < len(p) else field.zero
        have = cur[deg - k] if deg - k < len(cur) else field.zero
        q[m - k] = q[m - k] + (target - have) / n_scalar
    if poly_pow(q, n, field) != p:
        return None
    return q
