"""Matrix realization of the geometric crystal.

M(x, z) = A(x) + z B(x) + z^2 C(x) is a 2n x 2n matrix over exact rationals,
built from its first column by explicit column recurrences.  The module also
provides the unipotent generators G_i(a), the sign/permutation matrices used
in the conjugation identities, and the structural checks (factorization,
orthogonality, rank-one collapse, e_i^c realization, component retrieval).

Identities polynomial in the spectral parameter z are certified by exact
evaluation at sampled z values (degree <= 2L for an L-fold product, so 2L+1
distinct samples suffice).
"""

from fractions import Fraction

from .geom_crystal import (GcPoint, apply_e, eps, level, phi, prod_apply_e,
                           prod_eps, prod_phi, sigma1, sigman, star, tau)
from .matrices import (det_bareiss, identity, mat_mul, mat_mul_many,
                       transpose, zeros)

# Entries under construction are degree <= 2 polynomials in z,
# kept as coefficient triples [c0, c1, c2].


def _padd(p, q):
    return [p[0] + q[0], p[1] + q[1], p[2] + q[2]]


def _pscale(p, s):
    return [p[0] * s, p[1] * s, p[2] * s]


def _pshift(p):
    # multiply by z
    if p[2] != 0:
        raise ValueError("degree overflow")
    return [Fraction(0), p[0], p[1]]


def build_M_triple(x):
    """The coefficient matrices (A, B, C) of M(x, z)."""
    n = x.n
    dim = 2 * n
    lev = level(x)
    lz1 = [Fraction(-1), lev, Fraction(0)]  # ell*z - 1
    zero = [Fraction(0)] * 3

    cols = [None] * (dim + 1)  # 1-based columns; each a list of dim polys

    first = []
    for i in range(1, dim + 1):
        if i == 1:
            v = x.x(1) / x.xbar(1)
        elif i <= n - 1:
            v = Fraction(1)
            for k in range(1, i):
                v *= x.x(k)
            v *= 1 + x.x(i) / x.xbar(i)
        elif i == n:
            v = Fraction(1)
            for k in range(1, n + 1):
                v *= x.x(k)
        elif i == n + 1:
            v = Fraction(1)
            for k in range(1, n):
                v *= x.x(k)
        else:
            v = lev
            for k in range(1, dim - i + 1):
                v /= x.xbar(k)
        first.append([v, Fraction(0), Fraction(0)])
    cols[1] = first

    def bump(src, scale, extras):
        col = []
        for i in range(1, dim + 1):
            p = _pscale(src[i - 1], scale)
            if i in extras:
                p = _padd(p, extras[i])
            col.append(p)
        return col

    for j in range(1, n - 1):
        cols[j + 1] = bump(cols[j], Fraction(1) / x.x(j), {
            j: _pscale(lz1, Fraction(1) / x.xbar(j)),
            j + 1: lz1,
        })
    cols[n] = bump(cols[n - 1], Fraction(1) / x.x(n - 1), {
        n - 1: _pscale(lz1, Fraction(1) / x.xbar(n - 1)),
        n + 1: lz1,
    })
    cols[n + 1] = bump(cols[n - 1], Fraction(1) / (x.x(n - 1) * x.x(n)), {
        n - 1: _pscale(lz1, Fraction(1) / (x.xbar(n - 1) * x.x(n))),
        n: lz1,
    })

    def xbig(i):
        # Xbar_i = 1 + xbar_i/x_i
        return 1 + x.xbar(i) / x.x(i)

    one_m_lz = _pscale(lz1, Fraction(-1))  # 1 - ell*z
    r1 = x.xbar(1) / x.x(1)
    col = []
    for i in range(1, dim + 1):
        p = _pshift(_pscale(cols[1][i - 1], r1))
        if i == dim:
            p = _padd(p, _pscale(one_m_lz, r1))
        elif i == 1:
            p = _padd(p, _pshift(lz1))
        col.append(p)
    cols[dim] = col

    s1 = x.xbar(1) * xbig(2)
    col = []
    for i in range(1, dim + 1):
        p = _pshift(_pscale(cols[1][i - 1], s1))
        if i == dim:
            p = _padd(p, _pscale(one_m_lz, s1))
        elif i == dim - 1:
            p = _padd(p, _pscale(one_m_lz, x.xbar(2) / x.x(2)))
        col.append(p)
    cols[dim - 1] = col

    for j in range(2, n - 1):
        s = x.xbar(j) * xbig(j + 1) / xbig(j)
        cols[dim - j] = bump(cols[dim + 1 - j], s, {
            dim + 1 - j: _pscale(one_m_lz, s),
            dim - j: _pscale(one_m_lz, x.xbar(j + 1) / x.x(j + 1)),
        })

    A = [[cols[j + 1][i][0] for j in range(dim)] for i in range(dim)]
    B = [[cols[j + 1][i][1] for j in range(dim)] for i in range(dim)]
    C = [[cols[j + 1][i][2] for j in range(dim)] for i in range(dim)]
    return A, B, C


def build_M(x, z):
    """M(x, z) evaluated at a concrete rational spectral parameter."""
    A, B, C = build_M_triple(x)
    z = Fraction(z)
    dim = len(A)
    return [[A[i][j] + z * B[i][j] + z * z * C[i][j] for j in range(dim)]
            for i in range(dim)]


# ---------------------------------------------------------------------------
# Structured matrices


def G(i, a, n):
    """Unipotent generator G_i(a), 0 <= i <= n."""
    dim = 2 * n
    out = identity(dim)
    a = Fraction(a)
    if 1 <= i <= n - 1:
        out[i - 1][i] = a
        out[dim - i - 1][dim - i] = a
    elif i == n:
        out[n - 2][n] = a
        out[n - 1][n + 1] = a
    elif i == 0:
        out[dim - 2][0] = a
        out[dim - 1][1] = a
    else:
        raise ValueError("index out of range")
    return out


def F(i, a, n):
    """F_i(a) = transpose of G_i(a)."""
    return transpose(G(i, a, n))


def d_matrix(x):
    """diag(x_1/xbar_1, ..., x_{n-1}/xbar_{n-1}, x_n, 1/x_n, ..., xbar_1/x_1)."""
    n = x.n
    diag = ([x.x(i) / x.xbar(i) for i in range(1, n)]
            + [x.x(n), 1 / Fraction(x.x(n))]
            + [x.xbar(i) / x.x(i) for i in range(n - 1, 0, -1)])
    out = zeros(2 * n)
    for i, v in enumerate(diag):
        out[i][i] = v
    return out


def S_matrix(n):
    out = zeros(2 * n)
    for i in range(1, n + 1):
        j = n + 1 - i
        sign = Fraction((-1) ** (i - 1))
        out[i - 1][n + j - 1] = sign          # T block
        out[n + j - 1][i - 1] = sign          # transpose block
    return out


def P_matrix(n):
    return [[Fraction(1)] * (2 * n) for _ in range(2 * n)]


def J1_matrix(z, n):
    z = Fraction(z)
    if z == 0:
        raise ValueError("spectral parameter required nonzero")
    out = zeros(2 * n)
    out[0][2 * n - 1] = z
    out[2 * n - 1][0] = 1 / z
    for i in range(1, 2 * n - 1):
        out[i][i] = Fraction(1)
    return out


def Jn_matrix(n):
    out = zeros(2 * n)
    out[n - 1][n] = Fraction(1)
    out[n][n - 1] = Fraction(1)
    for i in range(n - 1):
        out[i][i] = Fraction(1)
        out[2 * n - 1 - i][2 * n - 1 - i] = Fraction(1)
    return out


def J_matrix(n):
    out = zeros(2 * n)
    for i in range(2 * n):
        out[i][2 * n - 1 - i] = Fraction(1)
    return out


def Jstar_matrix(n):
    out = zeros(2 * n)
    out[n - 1][n - 1] = Fraction(1)
    out[n][n] = Fraction(1)
    for i in range(1, n):
        out[i - 1][2 * n - i] = Fraction(1)
        out[2 * n - i][i - 1] = Fraction(1)
    return out


def D1_matrix(x, A=None):
    """diag of the last row of A(x)."""
    A = build_M_triple(x)[0] if A is None else A
    dim = len(A)
    out = zeros(dim)
    for j in range(dim):
        out[j][j] = A[dim - 1][j]
    return out


def D2_matrix(x, A=None):
    """diag of the first column of A(x)."""
    A = build_M_triple(x)[0] if A is None else A
    dim = len(A)
    out = zeros(dim)
    for i in range(dim):
        out[i][i] = A[i][0]
    return out


def factor_A(x):
    """Factors F_1(xb_1)...F_{n-2}(xb_{n-2}) F_n(xb_{n-1}) d(x) F_{n-1}(x_{n-1})...F_1(x_1)."""
    n = x.n
    factors = [F(i, x.xbar(i), n) for i in range(1, n - 1)]
    factors.append(F(n, x.xbar(n - 1), n))
    factors.append(d_matrix(x))
    factors.extend(F(i, x.x(i), n) for i in range(n - 1, 0, -1))
    return factors


# ---------------------------------------------------------------------------
# Checks


def _mcheck(m):
    # X S tX S, shared by several orthogonality checks
    return None


def check_MSMS(x, z):
    """M(x,z) S tM(x,z) S == (1 - z*level)^2 E, exactly."""
    n = x.n
    z = Fraction(z)
    M = build_M(x, z)
    S = S_matrix(n)
    lhs = mat_mul_many([M, S, transpose(M), S])
    scale = (1 - z * level(x)) ** 2
    rhs = [[scale if i == j else Fraction(0) for j in range(2 * n)]
           for i in range(2 * n)]
    return lhs == rhs


def det_M(x, z):
    return det_bareiss(build_M(x, z))


def check_rank_one(x):
    """M(x, 1/level) == (1/level) D2 P D1, and B == D2 P D1 - l*A - C/l."""
    n = x.n
    lev = level(x)
    A, B, C = build_M_triple(x)
    D1 = D1_matrix(x, A)
    D2 = D2_matrix(x, A)
    DPD = mat_mul_many([D2, P_matrix(n), D1])
    M = build_M(x, 1 / lev)
    if M != [[v / lev for v in row] for row in DPD]:
        return False
    expect_B = [[DPD[i][j] - lev * A[i][j] - C[i][j] / lev
                 for j in range(2 * n)] for i in range(2 * n)]
    return B == expect_B


def check_GMG(i, c, x, z):
    """G_i((c-1)/(z^d eps)) M(x,z) G_i((1/c-1)/(z^d phi)) == M(e_i^c(x), z)."""
    z = Fraction(z)
    c = Fraction(c)
    zpow = z if i == 0 else Fraction(1)
    if zpow == 0:
        raise ValueError("spectral parameter required nonzero")
    lhs = mat_mul_many([
        G(i, (c - 1) / (zpow * eps(i, x)), x.n),
        build_M(x, z),
        G(i, (1 / c - 1) / (zpow * phi(i, x)), x.n),
    ])
    return lhs == build_M(apply_e(i, c, x), z)


def check_prod_GMG(i, c, xs, z):
    """The L-fold version of the unipotent realization of e_i^c."""
    z = Fraction(z)
    c = Fraction(c)
    n = xs[0].n
    zpow = z if i == 0 else Fraction(1)
    if zpow == 0:
        raise ValueError("spectral parameter required nonzero")
    prod = mat_mul_many([build_M(p, z) for p in xs])
    lhs = mat_mul_many([
        G(i, (c - 1) / (zpow * prod_eps(i, xs)), n),
        prod,
        G(i, (1 / c - 1) / (zpow * prod_phi(i, xs)), n),
    ])
    ys = prod_apply_e(i, c, xs)
    return lhs == mat_mul_many([build_M(p, z) for p in ys])


def check_JMJ(x, z, y=None):
    """The four conjugation identities relating M to sigma_1, sigma_n, tau, *."""
    n = x.n
    z = Fraction(z)
    M = build_M(x, z)
    if z != 0:
        J1 = J1_matrix(z, n)
        if mat_mul_many([J1, M, J1]) != build_M(sigma1(x), z):
            return False
    Jn = Jn_matrix(n)
    if mat_mul_many([Jn, M, Jn]) != build_M(sigman(x), z):
        return False
    J = J_matrix(n)
    if mat_mul_many([J, transpose(M), J]) != build_M(tau(x), z):
        return False
    y = x if y is None else y
    Js = Jstar_matrix(n)
    xstar, _ = star((x, y))
    return mat_mul_many([Js, transpose(build_M(y, z)), Js]) == build_M(xstar, z)


# ---------------------------------------------------------------------------
# Component retrieval


def _inverse_M(x, z):
    # M^{-1} = S tM S / (1 - z*level)^2
    n = x.n
    z = Fraction(z)
    scale = (1 - z * level(x)) ** 2
    if scale == 0:
        raise ValueError("M is singular at z = 1/level")
    S = S_matrix(n)
    inv = mat_mul_many([S, transpose(build_M(x, z)), S])
    return [[v / scale for v in row] for row in inv]


def _solve_first_column(col, lev, n):
    # Invert the first-column formulas: col is proportional to the first
    # column of A(x) for a point x of level lev.
    dim = 2 * n
    lam = col[dim - 1] / lev
    if lam == 0:
        raise ValueError("input is not a product of M-matrices")
    xbar = {}
    for k in range(1, n - 1):
        xbar[k] = col[dim - k] / col[dim - 1 - k]
    xs = {1: xbar[1] * col[0] / lam}
    prefix = xs[1]
    for i in range(2, n - 1):
        u = col[i - 1] / (lam * prefix)  # 1 + x_i/xbar_i
        xs[i] = xbar[i] * (u - 1)
        prefix *= xs[i]
    p = col[n] / lam  # x_1 ... x_{n-1}
    xs[n - 1] = p / prefix
    xs[n] = col[n - 1] / col[n]
    tail = p * xs[n]
    for k in range(1, n - 1):
        tail *= xbar[k]
    xbar[n - 1] = lev / tail
    coords = ([xs[i] for i in range(1, n + 1)]
              + [xbar[i] for i in range(n - 1, 0, -1)])
    if not all(v > 0 for v in coords):
        raise ValueError("input is not a product of M-matrices")
    return GcPoint(n, coords)


def recover_components(levels, mprod, n):
    """Retrieve x^1, ..., x^L from a product of M-matrices.

    `levels` lists the (pairwise distinct) levels of the factors; `mprod` is
    a callable evaluating the product at any rational z.  At z = 1/level of
    the leading factor the product is rank one and any nonzero column is
    proportional to the first column of A(x^1); x^1 is solved from it and
    its inverse matrix is peeled off.
    """
    levels = [Fraction(l) for l in levels]
    if len(set(levels)) != len(levels):
        raise ValueError("levels must be pairwise distinct")
    dim = 2 * n
    out = []
    cur = mprod
    for idx, lev in enumerate(levels):
        mat = cur(1 / lev)
        pivot = None
        for j in range(dim):
            if any(mat[i][j] != 0 for i in range(dim)):
                pivot = j
                break
        if pivot is None:
            raise ValueError("input is not a product of M-matrices")
        col = [mat[i][pivot] for i in range(dim)]
        if any(v == 0 for v in col):
            raise ValueError("input is not a product of M-matrices")
        # rank-one test: every column a scalar multiple of the pivot column
        for j in range(dim):
            scale = mat[0][j] / col[0]
            if any(mat[i][j] != scale * col[i] for i in range(dim)):
                raise ValueError("input is not a product of M-matrices")
        x = _solve_first_column(col, lev, n)
        if level(x) != lev:
            raise ValueError("input is not a product of M-matrices")
        out.append(x)
        cur = (lambda prev, xc: lambda z: mat_mul(_inverse_M(xc, z), prev(z)))(cur, x)
    # what remains must be the identity
    zprobe = Fraction(1)
    while any(zprobe == 1 / l for l in levels):
        zprobe += 1
    if cur(zprobe) != identity(dim):
        raise ValueError("input is not a product of M-matrices")
    return out


# ---------------------------------------------------------------------------
# Lower-triangular action (appendix construction)


def apply_e_lower(i, c, X):
    """e_i^c on a lower-triangular X with X S tX S = E, via G_i(u) X G_i(v)^{-1}."""
    dim = len(X)
    n = dim // 2
    if not 1 <= i <= n - 1:
        raise ValueError("index out of range")
    c = Fraction(c)
    piv = X[i][i - 1]
    if piv == 0:
        raise ValueError("zero subdiagonal pivot")
    u = X[i - 1][i - 1] / piv * (c - 1)
    v = X[i][i] / piv * (c - 1) / c
    return mat_mul_many([G(i, u, n), X, G(i, -v, n)])


def matrix_eps_phi(X, i):
    """(eps_i, phi_i) of the point tuple realized by X = A(x^1)...A(x^L)."""
    if X[i - 1][i - 1] == 0 or X[i][i] == 0:
        raise ValueError("zero diagonal")
    return X[i][i - 1] / X[i - 1][i - 1], X[i][i - 1] / X[i][i]
