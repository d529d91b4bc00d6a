"""The birational R map on pairs and its V/W invariants.

A pair (x, y) of same-rank points is mapped to (x', y') with swapped levels
so that M(x,z)M(y,z) = M(x',z)M(y',z).  The coordinates of the image are
ratios of the functions V_i, W_i computed here.

The canonical evaluation path is subtraction-free (explicit monomial sums
for the V_i, the product forms for the W_i), so the identical code runs in
the max-plus semifield, where it becomes the combinatorial R.  The
subtraction-bearing recursions exist only as rational-mode cross-checks.
"""

from .geom_crystal import GcPoint, eps, level, phi, sigma1, star
from .semifield import RATIONAL


def pair_sigma1(p):
    x, y = p
    return sigma1(x), sigma1(y)


def _rprod(sf, ratios):
    acc = sf.one
    for a, b in ratios:
        acc = sf.mul(acc, sf.div(a, b))
    return acc


def _ssum(sf, terms):
    acc = None
    for t in terms:
        acc = t if acc is None else sf.add(acc, t)
    return acc


def v0(p):
    """(A(x)A(y))_{2n,1} as an explicit six-part subtraction-free sum."""
    x, y = p
    sf, n, one = x.sf, x.n, x.sf.one
    lx, ly = level(x), level(y)
    terms = [sf.mul(lx, sf.div(y.x(1), y.xbar(1)))]
    for m in range(2, n):
        pref = _rprod(sf, [(y.x(i), x.x(i)) for i in range(1, m)])
        bracket = sf.add(one, sf.div(y.x(m), y.xbar(m)))
        terms.append(sf.mul(lx, sf.mul(pref, bracket)))
    mixed = sf.one
    for i in range(1, n):
        mixed = sf.mul(mixed, sf.mul(x.xbar(i), y.x(i)))
    terms.append(sf.mul(mixed, sf.mul(x.x(n), y.x(n))))
    terms.append(sf.mul(ly, sf.div(x.xbar(1), x.x(1))))
    for m in range(2, n):
        pref = _rprod(sf, [(x.xbar(i), y.xbar(i)) for i in range(1, m)])
        bracket = sf.add(one, sf.div(x.xbar(m), x.x(m)))
        terms.append(sf.mul(ly, sf.mul(pref, bracket)))
    terms.append(mixed)
    return _ssum(sf, terms)


def _v_explicit(i, p):
    # V_i as the sum of the theta/theta'/eta/eta' monomial generators,
    # 0 <= i <= n-1.
    x, y = p
    sf, n = x.sf, x.n
    lx, ly = level(x), level(y)

    def up(a, b):
        # prod_{k=a..b} ybar_k/xbar_k
        return _rprod(sf, [(y.xbar(k), x.xbar(k)) for k in range(a, b + 1)])

    def down(a, b):
        # prod_{k=a..b} xbar_k/ybar_k
        return _rprod(sf, [(x.xbar(k), y.xbar(k)) for k in range(a, b + 1)])

    def head(j):
        # prod_{k=1..j} y_k/x_k
        return _rprod(sf, [(y.x(k), x.x(k)) for k in range(1, j + 1)])

    terms = []
    for j in range(1, n - 1):
        if j <= i:
            terms.append(sf.mul(lx, up(j + 1, i)))
        else:
            terms.append(sf.mul(ly, down(i + 1, j)))
        terms.append(sf.mul(lx, sf.mul(up(1, i), head(j))))
    for j in range(1, n + 1):
        if j <= i:
            terms.append(sf.mul(lx, sf.mul(up(j + 1, i),
                                           sf.div(y.xbar(j), x.x(j)))))
        elif j <= n - 1:
            terms.append(sf.mul(ly, sf.mul(down(i + 1, j),
                                           sf.div(y.xbar(j), x.x(j)))))
        else:
            terms.append(sf.mul(ly, sf.mul(down(i + 1, n - 1), x.x(n))))
        if j <= n - 1:
            terms.append(sf.mul(lx, sf.mul(sf.mul(up(1, i), head(j)),
                                           sf.div(x.x(j), y.xbar(j)))))
        else:
            t = sf.mul(lx, sf.mul(sf.mul(up(1, i), head(n - 1)),
                                  sf.div(sf.one, x.x(n))))
            if i == n - 1:
                t = sf.mul(t, sf.div(lx, ly))
            terms.append(t)
    return _ssum(sf, terms)


def _v_recursion(p):
    # Rational-mode cross-check: seed with v0 and run the two-term
    # recursions (which involve subtraction).
    x, y = p
    n = x.n
    lx, ly = level(x), level(y)
    vs = [v0(p)]
    for i in range(1, n - 1):
        vs.append(y.xbar(i) / x.xbar(i) * vs[i - 1]
                  + (lx - ly) * (1 + y.xbar(i) / x.x(i)))
    vs.append(y.xbar(n - 1) / x.xbar(n - 1) * vs[n - 2]
              + (lx - ly) * (1 / y.x(n) + y.xbar(n - 1) / x.x(n - 1)))
    return vs


class VWTable:
    """The values V_0, V_0^{sigma_1}, V_i, V_i^*, W_i, Vtilde_j for a pair.

    v/vstar are indexed 0..n-1, w and vtilde are dicts keyed 1..n-1 and
    1..n-2 respectively.
    """

    __slots__ = ("n", "sf", "v", "vstar", "v0_s1", "w", "vtilde")

    def __init__(self, n, sf):
        self.n = n
        self.sf = sf
        self.v = [None] * n
        self.vstar = [None] * n
        self.v0_s1 = None
        self.w = {}
        self.vtilde = {}


def v_table(p):
    """All V_i, V_i^*, V_0^{sigma_1} by the subtraction-free formula.

    In the rational semifield the values are additionally recomputed by the
    two-term recursions and compared exactly.
    """
    x, _ = p
    n, sf = x.n, x.sf
    vt = VWTable(n, sf)
    ps = star(p)
    for i in range(n):
        vt.v[i] = _v_explicit(i, p)
        vt.vstar[i] = _v_explicit(i, ps)
    vt.v0_s1 = v0(pair_sigma1(p))
    if sf.is_positive_domain:
        if vt.v != _v_recursion(p) or vt.vstar != _v_recursion(ps):
            raise ArithmeticError("recursion cross-check failed")
    return vt


def w_table(p, vt):
    """Fill W_1..W_{n-1} and Vtilde_1..Vtilde_{n-2} into the table.

    W_1 and W_{n-1} are the two-factor products; the middle W_i use the
    subtraction-free rearrangement
    W_i = (V_i V_{i-1}^*/y_i + V_{i-1} V_i^*/xbar_i) / (1/x_i + 1/ybar_i).
    """
    x, y = p
    n, sf, one = vt.n, vt.sf, vt.sf.one
    vt.w[1] = sf.mul(vt.v[0], vt.v0_s1)
    for i in range(2, n - 1):
        num = sf.add(
            sf.div(sf.mul(vt.v[i], vt.vstar[i - 1]), y.x(i)),
            sf.div(sf.mul(vt.v[i - 1], vt.vstar[i]), x.xbar(i)))
        den = sf.add(sf.div(one, x.x(i)), sf.div(one, y.xbar(i)))
        vt.w[i] = sf.div(num, den)
    vt.w[n - 1] = sf.mul(vt.v[n - 1], vt.vstar[n - 1])
    if sf.is_positive_domain:
        lx, ly = level(x), level(y)
        for i in range(1, n - 1):
            alt = (vt.v[i] * vt.vstar[i] + (ly - lx) * vt.vstar[i]
                   + (lx - ly) * vt.v[i])
            if vt.w[i] != alt:
                raise ArithmeticError("recursion cross-check failed")
    for j in range(1, n - 1):
        vt.vtilde[j] = sf.div(
            sf.add(vt.w[j], sf.mul(sf.div(x.xbar(j + 1), x.x(j + 1)),
                                   vt.w[j + 1])),
            vt.vstar[j])
    return vt


def full_table(p):
    return w_table(p, v_table(p))


def tropical_r(p):
    """The R map on a pair; levels swap, all identities are ratio formulas."""
    x, y = p
    n, sf = x.n, x.sf
    vt = full_table(p)
    v, vs, w = vt.v, vt.vstar, vt.w

    xs = [sf.mul(y.x(1), sf.div(vt.v0_s1, v[1]))]
    for i in range(2, n):
        xs.append(sf.mul(y.x(i), sf.div(sf.mul(v[i - 1], w[i]),
                                        sf.mul(v[i], w[i - 1]))))
    xs.append(sf.mul(y.x(n), sf.div(v[n - 1], vs[n - 1])))
    xbars = [sf.mul(y.xbar(1), sf.div(v[0], v[1]))]
    for i in range(2, n):
        xbars.append(sf.mul(y.xbar(i), sf.div(v[i - 1], v[i])))

    ys = [sf.mul(x.x(1), sf.div(v[0], vs[1]))]
    for i in range(2, n):
        ys.append(sf.mul(x.x(i), sf.div(vs[i - 1], vs[i])))
    ys.append(sf.mul(x.x(n), sf.div(vs[n - 1], v[n - 1])))
    ybars = [sf.mul(x.xbar(1), sf.div(vt.v0_s1, vs[1]))]
    for i in range(2, n):
        ybars.append(sf.mul(x.xbar(i), sf.div(sf.mul(vs[i - 1], w[i]),
                                              sf.mul(vs[i], w[i - 1]))))

    return (GcPoint(n, xs + xbars[::-1], sf),
            GcPoint(n, ys + ybars[::-1], sf))


def ec_factors(i, c, p):
    """The quotients (omega_i, psi_i, Omega_i, Psi_i) governing e_i^c.

    Omega/Psi are defined for 0 <= i <= n-2 (they reference coordinate
    i+1 of the untransformed pair, or slot 2 when i=0) and are None for
    i in {n-1, n}.
    """
    x, y = p
    sf, n = x.sf, x.n
    px, ey = phi(i, x), eps(i, y)
    omega = sf.div(sf.add(sf.mul(c, px), ey), sf.add(px, ey))
    psi = sf.div(sf.add(sf.mul(c, px), sf.mul(c, ey)),
                 sf.add(sf.mul(c, px), ey))
    if i <= n - 2:
        k = 2 if i == 0 else i + 1
        big_omega = sf.div(sf.add(x.x(k), sf.mul(omega, x.xbar(k))),
                           sf.add(x.x(k), x.xbar(k)))
        big_psi = sf.div(sf.add(y.x(k), sf.mul(psi, y.xbar(k))),
                         sf.add(y.x(k), y.xbar(k)))
    else:
        big_omega = big_psi = None
    return omega, psi, big_omega, big_psi


def type_a_r(xs, ys, sf=RATIONAL):
    """The cyclic reference R: x'_i = y_i P_i/P_{i-1}, y'_i = x_i P_{i-1}/P_i."""
    n = len(xs)
    if len(ys) != n:
        raise ValueError("length mismatch")

    def pfun(i):
        terms = []
        for k in range(1, n + 1):
            m = sf.one
            for j in range(k, n + 1):
                m = sf.mul(m, xs[(i + j - 1) % n])
            for j in range(1, k + 1):
                m = sf.mul(m, ys[(i + j - 1) % n])
            terms.append(m)
        return _ssum(sf, terms)

    ps = [pfun(i) for i in range(n + 1)]
    xout = [sf.mul(ys[i - 1], sf.div(ps[i], ps[i - 1]))
            for i in range(1, n + 1)]
    yout = [sf.mul(xs[i - 1], sf.div(ps[i - 1], ps[i]))
            for i in range(1, n + 1)]
    return xout, yout
