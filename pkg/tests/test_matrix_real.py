import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

import tropr.geom_crystal as gc
import tropr.matrix_real as mr
from tropr.matrices import (det_bareiss, identity, mat_mul, mat_mul_many,
                            transpose)
from tropr.verify import rand_point, rand_points_distinct, rand_rat

from conftest import gc_coords, pos_fraction


def ones(n):
    return gc.GcPoint(n, [Fraction(1)] * (2 * n - 1))


def rng():
    return random.Random(20240817)


def test_matrices_helpers():
    a = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert mat_mul(a, identity(2)) == a
    assert transpose(a) == [[Fraction(1), Fraction(3)],
                            [Fraction(2), Fraction(4)]]
    assert det_bareiss(a) == -2
    assert det_bareiss([[Fraction(1, 2), Fraction(1)],
                        [Fraction(1), Fraction(2)]]) == 0
    assert det_bareiss(identity(5)) == 1


def test_triple_shape_all_ones_n4():
    # at the all-ones point of rank 4 every first-column entry collapses
    n = 4
    p = ones(n)
    A, B, C = mr.build_M_triple(p)
    dim = 2 * n
    # C has the single corner entry equal to the level
    assert C[0][dim - 1] == gc.level(p)
    assert sum(1 for row in C for v in row if v != 0) == 1
    # A is lower triangular; B has a zero in the corner slot
    assert all(A[i][j] == 0 for i in range(dim) for j in range(dim) if j > i)
    assert B[0][dim - 1] == 0
    assert A[n - 1][0] == 1   # product x_1..x_n
    # last row of A: level/(x_1..x_{i-1}) then the bar products
    assert A[dim - 1][n] == 1
    assert A[dim - 1][dim - 1] == 1
    assert mr.build_M(p, Fraction(0)) == A


def test_first_column_and_last_row_random():
    p = rand_point(3, rng())
    n = 3
    A = mr.build_M_triple(p)[0]
    lev = gc.level(p)
    assert A[0][0] == p.x(1) / p.xbar(1)
    assert A[n - 1][0] == p.x(1) * p.x(2) * p.x(3)
    assert A[n][0] == p.x(1) * p.x(2)
    assert A[2 * n - 1][0] == lev
    assert A[2 * n - 2][0] == lev / p.xbar(1)
    assert A[2 * n - 1][n] == p.xbar(1) * p.xbar(2)
    assert A[2 * n - 1][2 * n - 1] == p.xbar(1) / p.x(1)
    for i in range(1, n + 1):
        assert A[2 * n - 1][i - 1] == lev / _prefix(p, i)


def _prefix(p, i):
    acc = Fraction(1)
    for k in range(1, i):
        acc *= p.x(k)
    return acc


def test_factorization():
    r = rng()
    for n in (3, 4, 5):
        p = rand_point(n, r)
        A = mr.build_M_triple(p)[0]
        factors = mr.factor_A(p)
        assert mat_mul_many(factors) == A
        S = mr.S_matrix(n)
        for X in factors:
            assert mat_mul_many([X, S, transpose(X), S]) == identity(2 * n)
    # all-ones rank 3: the diagonal factor is the identity
    d = mr.d_matrix(ones(3))
    assert d == identity(6)


def test_s_matrix_involution():
    for n in (3, 4):
        S = mr.S_matrix(n)
        assert transpose(S) == S
        assert mat_mul(S, S) == identity(2 * n)


def test_msms_det():
    r = rng()
    for n in (3, 4):
        p = rand_point(n, r)
        z = rand_rat(r)
        lev = gc.level(p)
        assert mr.check_MSMS(p, z)
        assert mr.det_M(p, z) == (1 - z * lev) ** (2 * n)
        assert mr.det_M(p, 1 / lev) == 0
        assert mr.check_MSMS(p, 1 / lev)
        assert mr.det_M(p, Fraction(0)) == 1


def test_rank_one():
    r = rng()
    for n in (3, 4):
        p = rand_point(n, r)
        assert mr.check_rank_one(p)
        A = mr.build_M_triple(p)[0]
        D1, D2 = mr.D1_matrix(p, A), mr.D2_matrix(p, A)
        for j in range(2 * n):
            assert D1[j][j] == A[2 * n - 1][j]
            assert D2[j][j] == A[j][0]
        # the collapse point really is rank one
        M = mr.build_M(p, 1 / gc.level(p))
        col = [row[0] for row in M]
        for j in range(2 * n):
            scale = M[0][j] / col[0]
            assert all(M[i][j] == scale * col[i] for i in range(2 * n))


def test_gmg():
    r = rng()
    for n in (3, 4):
        p = rand_point(n, r)
        c = rand_rat(r)
        z = rand_rat(r)
        for i in range(n + 1):
            assert mr.check_GMG(i, Fraction(1), p, z)
            assert mr.check_GMG(i, c, p, z)
        with pytest.raises(ValueError):
            mr.check_GMG(0, c, p, Fraction(0))
        xs = rand_points_distinct(n, 3, r)
        for i in range(n + 1):
            assert mr.check_prod_GMG(i, c, xs, z)


def test_jmj():
    r = rng()
    for n in (3, 4):
        p = rand_point(n, r)
        y = rand_point(n, r)
        z = rand_rat(r)
        assert mr.check_JMJ(p, z, y)
        with pytest.raises(ValueError):
            mr.J1_matrix(Fraction(0), n)


def test_g_relations():
    r = rng()
    n = 4
    a, b, c = rand_rat(r), rand_rat(r), rand_rat(r)
    for i in range(n + 1):
        assert mat_mul(mr.G(i, a, n), mr.G(i, b, n)) == mr.G(i, a + b, n)
        for j in range(n + 1):
            if i == j:
                continue
            pij = gc.pairing(i, j, n)
            gi, gj = mr.G(i, a, n), mr.G(j, b, n)
            if pij == 0:
                assert mat_mul(gi, gj) == mat_mul(gj, gi)
            elif pij == -1:
                lhs = mat_mul_many([mr.G(i, a, n), mr.G(j, b, n),
                                    mr.G(i, c, n)])
                rhs = mat_mul_many([mr.G(j, b * c / (a + c), n),
                                    mr.G(i, a + c, n),
                                    mr.G(j, a * b / (a + c), n)])
                assert lhs == rhs
    with pytest.raises(ValueError):
        mr.G(n + 1, a, n)


def test_j_g_intertwining():
    r = rng()
    for n in (3, 4):
        a, z = rand_rat(r), rand_rat(r)
        assert mat_mul(mr.J1_matrix(z, n), mr.G(1, a, n)) == \
            mat_mul(mr.G(0, a / z, n), mr.J1_matrix(z, n))
        assert mat_mul(mr.Jn_matrix(n), mr.G(n - 1, a, n)) == \
            mat_mul(mr.G(n, a, n), mr.Jn_matrix(n))


def test_recover_round_trips():
    r = rng()
    n = 3
    for L in (1, 2, 3):
        xs = rand_points_distinct(n, L, r)

        def mprod(z, xs=xs):
            return mat_mul_many([mr.build_M(p, z) for p in xs])

        got = mr.recover_components([gc.level(p) for p in xs], mprod, n)
        assert list(got) == list(xs)


def test_recover_errors():
    r = rng()
    n = 3
    x = rand_point(n, r)

    def mprod(z):
        return mr.build_M(x, z)

    with pytest.raises(ValueError, match="pairwise distinct"):
        mr.recover_components([Fraction(2), Fraction(2)], mprod, n)
    with pytest.raises(ValueError, match="not a product"):
        mr.recover_components([Fraction(3)], lambda z: identity(2 * n), n)
    # a genuine rank-one but non-M matrix is also rejected
    bad = [[Fraction(1)] * (2 * n) for _ in range(2 * n)]
    with pytest.raises(ValueError, match="not a product"):
        mr.recover_components([Fraction(1, 2)], lambda z: bad, n)


def test_apply_e_lower():
    r = rng()
    for n in (3, 4):
        x, y = rand_points_distinct(n, 2, r)
        X = mat_mul(mr.build_M_triple(x)[0], mr.build_M_triple(y)[0])
        c, d = rand_rat(r), rand_rat(r)
        assert mr.apply_e_lower(1, Fraction(1), X) == X
        dim = 2 * n
        S = mr.S_matrix(n)
        for i in range(1, n - 1):
            lhs = mr.apply_e_lower(
                i, d, mr.apply_e_lower(i + 1, c * d,
                                       mr.apply_e_lower(i, c, X)))
            rhs = mr.apply_e_lower(
                i + 1, c, mr.apply_e_lower(i, c * d,
                                           mr.apply_e_lower(i + 1, d, X)))
            assert lhs == rhs
            assert all(lhs[a][b] == 0 for a in range(dim)
                       for b in range(dim) if b > a)
            assert mat_mul_many([lhs, S, transpose(lhs), S]) == identity(dim)
        # agrees with the componentwise action on the factors
        for i in range(1, n):
            moved = gc.prod_apply_e(i, c, (x, y))
            assert mr.apply_e_lower(i, c, X) == \
                mat_mul(mr.build_M_triple(moved[0])[0],
                        mr.build_M_triple(moved[1])[0])
        with pytest.raises(ValueError):
            mr.apply_e_lower(0, c, X)
        with pytest.raises(ValueError):
            mr.apply_e_lower(1, c, identity(dim))


def test_matrix_eps_phi():
    r = rng()
    n = 3
    x, y = rand_points_distinct(n, 2, r)
    A = mr.build_M_triple(x)[0]
    for i in range(1, n):
        assert mr.matrix_eps_phi(A, i) == (gc.eps(i, x), gc.phi(i, x))
    X = mat_mul(A, mr.build_M_triple(y)[0])
    for i in range(1, n):
        assert mr.matrix_eps_phi(X, i) == \
            (gc.prod_eps(i, (x, y)), gc.prod_phi(i, (x, y)))
    assert mr.matrix_eps_phi(mr.build_M_triple(ones(3))[0], n - 1) == (1, 1)


def test_appendix_product_fixtures():
    r = rng()
    for n in (3, 4):
        x, y = rand_points_distinct(n, 2, r)
        I = mat_mul(mr.build_M_triple(x)[0], mr.build_M_triple(y)[0])
        for i in range(1, n):
            assert I[i - 1][i - 1] == \
                x.x(i) * y.x(i) / (x.xbar(i) * y.xbar(i))
        assert I[n - 1][n - 1] == x.x(n) * y.x(n)
        assert I[n][n - 1] == 0
        for i in range(1, n + 1):
            assert sum(I[m - 1][i - 1] * I[2 * n - m][i - 1] * (-1) ** m
                       for m in range(i, n + 1)) == 0
        assert I[n - 1][n - 2] == \
            x.x(n - 1) * x.x(n) * y.x(n - 1) * y.x(n) * \
            (1 / x.x(n - 1) + 1 / (y.xbar(n - 1) * y.x(n)))
        assert I[n + 1][n - 2] == \
            y.x(n - 1) * y.x(n) * x.xbar(n - 1) * \
            (y.xbar(n - 1) + x.x(n - 1) * x.x(n)) * \
            (1 / x.x(n - 1) + 1 / (y.xbar(n - 1) * y.x(n)))


@settings(max_examples=10, deadline=None)
@given(gc_coords(3), pos_fraction)
def test_msms_property(coords, z):
    p = gc.GcPoint(3, coords)
    assert mr.check_MSMS(p, z)
    assert mr.det_M(p, z) == (1 - z * gc.level(p)) ** 6
