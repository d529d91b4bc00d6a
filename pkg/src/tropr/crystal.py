"""Finite crystals, Kashiwara-type operators and the combinatorial R.

Elements of B'_l carry 2n-1 integer coordinates (x_1,...,x_n,xbar_{n-1},
...,xbar_1) with x_n possibly negative; B_l is the nonnegative 2n-coordinate
picture related by an explicit bijection.  Operators that would leave the
crystal return None (the null symbol).

The combinatorial R is obtained by evaluating the birational R in the
max-plus semifield; an independent direct piecewise-linear transcription
and a brute-force propagation oracle are provided as cross-checks.
"""

from itertools import product

from .geom_crystal import GcPoint
from .semifield import TROPICAL
from .tropical_r import tropical_r, v0


class CrystalElem:
    """An element of B'_l: rank n, level l, 2n-1 integer coordinates."""

    __slots__ = ("n", "l", "coords")

    def __init__(self, n, coords):
        if n < 3:
            raise ValueError("rank must be at least 3")
        coords = tuple(int(v) for v in coords)
        if len(coords) != 2 * n - 1:
            raise ValueError("expected %d coordinates" % (2 * n - 1))
        if any(v < 0 for k, v in enumerate(coords) if k != n - 1):
            raise ValueError("coordinates other than x_n must be nonnegative")
        xn = coords[n - 1]
        if xn < -min(coords[n - 2], coords[n]):
            raise ValueError("x_n below -min(x_{n-1}, xbar_{n-1})")
        self.n = n
        self.l = sum(coords)
        self.coords = coords

    def x(self, i):
        return self.coords[i - 1]

    def xbar(self, i):
        return self.coords[2 * self.n - 1 - i]

    def __eq__(self, other):
        return (isinstance(other, CrystalElem) and self.n == other.n
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.n, self.coords))

    def __repr__(self):
        return "CrystalElem(n=%d, %r)" % (self.n, self.coords)

    def to_json(self):
        return {"n": self.n, "l": self.l, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, obj):
        e = cls(obj["n"], obj["coords"])
        if "l" in obj and obj["l"] != e.l:
            raise ValueError("level does not match coordinates")
        return e

    def to_gc(self):
        return GcPoint(self.n, self.coords, TROPICAL)


def is_member(n, coords):
    try:
        CrystalElem(n, coords)
    except ValueError:
        return False
    return True


def highest(l, n):
    """The element (l, 0, ..., 0)."""
    return CrystalElem(n, (l,) + (0,) * (2 * n - 2))


class ZetaElem:
    """The 2n nonnegative coordinates (zeta_1..zeta_n, zetabar_n..zetabar_1)."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords):
        coords = tuple(int(v) for v in coords)
        if len(coords) != 2 * n:
            raise ValueError("expected %d coordinates" % (2 * n))
        if any(v < 0 for v in coords):
            raise ValueError("coordinates must be nonnegative")
        if coords[n - 1] * coords[n] != 0:
            raise ValueError("zeta_n * zetabar_n must vanish")
        self.n = n
        self.coords = coords

    def zeta(self, i):
        return self.coords[i - 1]

    def zetabar(self, i):
        return self.coords[2 * self.n - i]

    def __eq__(self, other):
        return (isinstance(other, ZetaElem) and self.n == other.n
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.n, self.coords))

    def __repr__(self):
        return "ZetaElem(n=%d, %r)" % (self.n, self.coords)


def to_zeta(e):
    n = e.n
    xn = e.x(n)
    zeta = [e.x(i) for i in range(1, n - 1)]
    zeta.append(e.x(n - 1) + min(0, xn))
    zeta.append(max(0, xn))
    zetabar = [e.xbar(i) for i in range(1, n - 1)]
    zetabar.append(e.xbar(n - 1) + min(0, xn))
    zetabar.append(max(0, -xn))
    return ZetaElem(n, zeta + zetabar[::-1])


def from_zeta(z):
    n = z.n
    coords = [z.zeta(i) for i in range(1, n - 1)]
    coords.append(z.zeta(n - 1) + z.zetabar(n))
    coords.append(z.zeta(n) - z.zetabar(n))
    coords.append(z.zetabar(n - 1) + z.zetabar(n))
    coords.extend(z.zetabar(i) for i in range(n - 2, 0, -1))
    return CrystalElem(n, coords)


def _pos(v):
    return v if v > 0 else 0


def c_eps(i, e):
    n = e.n
    if i == 0:
        return e.x(1) + _pos(e.x(2) - e.xbar(2))
    if 1 <= i <= n - 2:
        return e.xbar(i) + _pos(e.x(i + 1) - e.xbar(i + 1))
    if i == n - 1:
        return e.x(n) + e.xbar(n - 1)
    if i == n:
        return e.xbar(n - 1)
    raise ValueError("index out of range")


def c_phi(i, e):
    n = e.n
    if i == 0:
        return e.xbar(1) + _pos(e.xbar(2) - e.x(2))
    if 1 <= i <= n - 2:
        return e.x(i) + _pos(e.xbar(i + 1) - e.x(i + 1))
    if i == n - 1:
        return e.x(n - 1)
    if i == n:
        return e.x(n - 1) + e.x(n)
    raise ValueError("index out of range")


def c_apply_e(i, c, e):
    """The operator on B'_l (negative c lowers); None when leaving the set."""
    if c == 0:
        return e
    n = e.n
    coords = list(e.coords)

    def xi(k):
        return max(e.x(k), e.xbar(k) + c) - max(e.x(k), e.xbar(k))

    if i == 0:
        t = xi(2)
        coords[0] = e.x(1) - t
        coords[1] = e.x(2) + t - c
        coords[2 * n - 3] = e.xbar(2) + t
        coords[2 * n - 2] = e.xbar(1) - t + c
    elif 1 <= i <= n - 2:
        t = xi(i + 1)
        coords[i - 1] = e.x(i) + c - t
        coords[i] = e.x(i + 1) + t - c
        coords[2 * n - 2 - i] = e.xbar(i + 1) + t
        coords[2 * n - 1 - i] = e.xbar(i) - t
    elif i == n - 1:
        coords[n - 2] = e.x(n - 1) + c
        coords[n - 1] = e.x(n) - c
    elif i == n:
        coords[n - 1] = e.x(n) + c
        coords[n] = e.xbar(n - 1) - c
    else:
        raise ValueError("index out of range")
    if not is_member(n, coords):
        return None
    return CrystalElem(n, coords)


def t_eps(i, pair):
    x, y = pair
    return max(c_eps(i, x), c_eps(i, x) + c_eps(i, y) - c_phi(i, x))


def t_phi(i, pair):
    x, y = pair
    return max(c_phi(i, y), c_phi(i, x) + c_phi(i, y) - c_eps(i, y))


def tensor_apply_e(i, c, pair):
    """Componentwise operator on a 2-tensor; None if either factor dies."""
    x, y = pair
    px, ey = c_phi(i, x), c_eps(i, y)
    c1 = max(c + px, ey) - max(px, ey)
    c2 = max(px, ey) - max(px, -c + ey)
    x2 = c_apply_e(i, c1, x)
    y2 = c_apply_e(i, c2, y)
    if x2 is None or y2 is None:
        return None
    return x2, y2


def comb_r(pair):
    """The combinatorial R: max-plus evaluation of the birational R."""
    x, y = pair
    xp, yp = tropical_r((x.to_gc(), y.to_gc()))
    return CrystalElem(x.n, xp.coords), CrystalElem(x.n, yp.coords)


def energy(pair):
    """Max-plus value of the six-part sum realizing (A(x)A(y))_{2n,1}."""
    x, y = pair
    return v0((x.to_gc(), y.to_gc()))


def enumerate_crystal(l, n):
    """All of B'_l, each element once, lexicographic in the coordinates."""
    if l < 0:
        raise ValueError("level must be nonnegative")
    out = []
    # every coordinate other than x_n lies in [0, l]; x_n is forced by the sum
    for rest in product(range(l + 1), repeat=2 * n - 2):
        xn = l - sum(rest)
        coords = rest[:n - 1] + (xn,) + rest[n - 1:]
        if is_member(n, coords):
            out.append(CrystalElem(n, coords))
    out.sort(key=lambda e: e.coords)
    return out


def enumerate_zeta(l, n):
    """All of B_l in the nonnegative 2n-coordinate picture."""
    out = []
    for coords in product(range(l + 1), repeat=2 * n):
        if sum(coords) == l and coords[n - 1] * coords[n] == 0:
            out.append(ZetaElem(n, coords))
    return out


def oracle_r(l1, l2, n):
    """The combinatorial R by propagation from the highest pair.

    The map is pinned on ((l1,0,...),(l2,0,...)) -> ((l2,0,...),(l1,0,...))
    and transported along all operators with c = +-1; covering the whole
    domain this way is checked, not assumed.
    """
    domain = [(a, b) for a in enumerate_crystal(l1, n)
              for b in enumerate_crystal(l2, n)]
    seed = (highest(l1, n), highest(l2, n))
    mapping = {seed: (highest(l2, n), highest(l1, n))}
    frontier = [seed]
    while frontier:
        nxt = []
        for p in frontier:
            q = mapping[p]
            for i in range(n + 1):
                for c in (1, -1):
                    p2 = tensor_apply_e(i, c, p)
                    if p2 is None or p2 in mapping:
                        continue
                    q2 = tensor_apply_e(i, c, q)
                    if q2 is None:
                        raise ValueError(
                            "connectivity assumption violated: image dies "
                            "at %r" % (p2,))
                    mapping[p2] = q2
                    nxt.append(p2)
        frontier = nxt
    missing = [p for p in domain if p not in mapping]
    if missing:
        raise ValueError("connectivity assumption violated: uncovered "
                         "elements %r" % (missing,))
    return mapping


# ---------------------------------------------------------------------------
# Independent piecewise-linear transcription of the combinatorial R
# (pure integer max/min arithmetic; no shared code with tropical_r).


def _pl_tables(xc, yc, n):
    # xc/yc are coordinate tuples; returns the additive V, V*, V0^{s1}, W.
    def x(i):
        return xc[i - 1]

    def xb(i):
        return xc[2 * n - 1 - i]

    def y(i):
        return yc[i - 1]

    def yb(i):
        return yc[2 * n - 1 - i]

    lx, ly = sum(xc), sum(yc)

    def vfun(i):
        cands = []
        for j in range(1, n - 1):
            if j <= i:
                cands.append(lx + sum(yb(k) - xb(k) for k in range(j + 1, i + 1)))
            else:
                cands.append(ly + sum(xb(k) - yb(k) for k in range(i + 1, j + 1)))
            cands.append(lx + sum(yb(k) - xb(k) for k in range(1, i + 1))
                         + sum(y(k) - x(k) for k in range(1, j + 1)))
        for j in range(1, n + 1):
            if j <= i:
                cands.append(lx + sum(yb(k) - xb(k) for k in range(j + 1, i + 1))
                             + yb(j) - x(j))
            elif j <= n - 1:
                cands.append(ly + sum(xb(k) - yb(k) for k in range(i + 1, j + 1))
                             + yb(j) - x(j))
            else:
                cands.append(ly + sum(xb(k) - yb(k) for k in range(i + 1, n))
                             + x(n))
            if j <= n - 1:
                cands.append(lx + sum(yb(k) - xb(k) for k in range(1, i + 1))
                             + sum(y(k) - x(k) for k in range(1, j + 1))
                             + x(j) - yb(j))
            else:
                t = (lx + sum(yb(k) - xb(k) for k in range(1, i + 1))
                     + sum(y(k) - x(k) for k in range(1, n)) - x(n))
                if i == n - 1:
                    t += lx - ly
                cands.append(t)
        return max(cands)

    return vfun, lx, ly


def _pl_star(xc, yc, n):
    xs = [yc[2 * n - 1 - i] for i in range(1, n)] + [yc[n - 1]]
    xbs = [yc[i - 1] for i in range(1, n)]
    ys = [xc[2 * n - 1 - i] for i in range(1, n)] + [xc[n - 1]]
    ybs = [xc[i - 1] for i in range(1, n)]
    return tuple(xs + xbs[::-1]), tuple(ys + ybs[::-1])


def piecewise_r(pair):
    """The combinatorial R written out directly in max/min form."""
    ex, ey = pair
    n = ex.n
    xc, yc = ex.coords, ey.coords

    vfun, _, _ = _pl_tables(xc, yc, n)
    v = [vfun(i) for i in range(n)]
    sxc, syc = _pl_star(xc, yc, n)
    vsfun, _, _ = _pl_tables(sxc, syc, n)
    vs = [vsfun(i) for i in range(n)]
    s1x = xc[2 * n - 2], *xc[1:2 * n - 2], xc[0]
    s1y = yc[2 * n - 2], *yc[1:2 * n - 2], yc[0]
    v0s1 = _pl_tables(tuple(s1x), tuple(s1y), n)[0](0)

    def x(i):
        return xc[i - 1]

    def xb(i):
        return xc[2 * n - 1 - i]

    def y(i):
        return yc[i - 1]

    def yb(i):
        return yc[2 * n - 1 - i]

    w = {1: v[0] + v0s1, n - 1: v[n - 1] + vs[n - 1]}
    for i in range(2, n - 1):
        w[i] = max(v[i] + vs[i - 1] - y(i), v[i - 1] + vs[i] - xb(i)) \
            + min(x(i), yb(i))

    xs = [y(1) + v0s1 - v[1]]
    for i in range(2, n):
        xs.append(y(i) + v[i - 1] + w[i] - v[i] - w[i - 1])
    xs.append(y(n) + v[n - 1] - vs[n - 1])
    xbs = [yb(1) + v[0] - v[1]]
    for i in range(2, n):
        xbs.append(yb(i) + v[i - 1] - v[i])
    ys = [x(1) + v[0] - vs[1]]
    for i in range(2, n):
        ys.append(x(i) + vs[i - 1] - vs[i])
    ys.append(x(n) + vs[n - 1] - v[n - 1])
    ybs = [xb(1) + v0s1 - vs[1]]
    for i in range(2, n):
        ybs.append(xb(i) + vs[i - 1] + w[i] - vs[i] - w[i - 1])

    return (CrystalElem(n, xs + xbs[::-1]),
            CrystalElem(n, ys + ybs[::-1]))
