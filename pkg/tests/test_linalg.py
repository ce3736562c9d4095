from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ideal_arrangements.linalg import (adjugate, dot, echelon, in_span, nullspace,
                                       pivot_columns, primitive, rank)

small = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=max_rows))


def test_primitive_normalises_sign_and_gcd():
    assert primitive((0, -4, 6)) == (0, 2, -3)
    assert primitive((3, 0, 0)) == (1, 0, 0)
    assert primitive((0, 0)) == (0, 0)


def test_rank_of_known_matrices():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rank([[0, 0, 0]]) == 0


def _frac_rank(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(M[0])
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_fraction_elimination(M):
    assert rank(M) == _frac_rank(M)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_nullspace_is_orthogonal_and_complementary(M):
    n = len(M[0])
    K = nullspace(M, n)
    assert len(K) == n - rank(M)
    for v in K:
        assert all(dot(row, v) == 0 for row in M)
        assert primitive(v) == tuple(v)
    if K:
        assert rank(K) == len(K)


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_pivot_columns_span_the_row_space(M):
    cols = pivot_columns(M)
    assert len(cols) == rank(M)
    assert rank([[r[c] for c in cols] for r in M]) == rank(M)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
@settings(max_examples=100, deadline=None)
def test_adjugate_identity(M):
    adj, det = adjugate(M)
    n = len(M)
    for i in range(n):
        for j in range(n):
            assert sum(M[i][k] * adj[k][j] for k in range(n)) == (det if i == j else 0)


def test_in_span():
    assert in_span([[1, 0, 0], [0, 1, 0]], [3, -2, 0])
    assert not in_span([[1, 0, 0], [0, 1, 0]], [0, 0, 1])


def test_echelon_returns_pivots():
    rows, piv = echelon([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert len(rows) == 2
