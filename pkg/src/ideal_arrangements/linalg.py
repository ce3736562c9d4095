"""Exact integer linear algebra on short integer vectors.

Everything here works on plain Python ints (tuples/lists) so results are
exact at any size; elimination is fraction-free (Bareiss).
"""
from fractions import Fraction
from math import gcd
from functools import reduce


def primitive(v):
    """Divide by the gcd and make the first nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    v = [x // g for x in v]
    for x in v:
        if x:
            if x < 0:
                v = [-y for y in v]
            break
    return tuple(v)


def echelon(rows, ncols=None):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns). Only the nonzero rows are kept.
    """
    M = [list(r) for r in rows]
    if not M:
        return [], []
    n = len(M[0]) if ncols is None else ncols
    m = len(M)
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = r
        while p < m and M[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            M[p], M[r] = M[r], M[p]
        piv = M[r][c]
        Mr = M[r]
        for i in range(r + 1, m):
            Mi = M[i]
            a = Mi[c]
            # rows with a == 0 still get rescaled, so the exact division by
            # the previous pivot keeps holding on the next step
            for j in range(c, n):
                Mi[j] = (piv * Mi[j] - a * Mr[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(echelon(rows)[1])


def pivot_columns(rows):
    """Lexicographically first set of columns spanning the column space."""
    if not rows:
        return []
    return echelon(rows)[1]


def nullspace(rows, n):
    """Integer basis (primitive vectors) of {x : r . x = 0 for r in rows}."""
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    E, pivots = echelon(rows, n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            s = sum(E[k][j] * x[j] for j in range(c + 1, n))
            x[c] = Fraction(-s, 1) / E[k][c]
        den = reduce(lambda a, b: a * b // gcd(a, b), (q.denominator for q in x), 1)
        basis.append(primitive([int(q * den) for q in x]))
    return basis


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def in_span(rows, v):
    """True iff v lies in the rational span of rows."""
    if not any(v):
        return True
    if not rows:
        return False
    return rank(list(rows) + [v]) == rank(rows)


def project(vectors, columns):
    return [tuple(v[c] for c in columns) for v in vectors]


def adjugate(M):
    """Adjugate and determinant of a square integer matrix (exact)."""
    n = len(M)
    if n == 0:
        return [], 1
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return [[0] * n for _ in range(n)], 0
        if p != c:
            A[p], A[c] = A[c], A[p]
            det = -det
        piv = A[c][c]
        det *= piv
        A[c] = [x / piv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    inv = [row[n:] for row in A]
    adj = [[int(x * det) for x in row] for row in inv]
    return adj, int(det)
