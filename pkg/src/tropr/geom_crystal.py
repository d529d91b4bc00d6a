"""The geometric D_n^(1) crystal.

Points carry 2n-1 coordinates (x_1, ..., x_n, xbar_{n-1}, ..., xbar_1) over a
pluggable semifield.  All maps here are subtraction-free, so the identical
code evaluates rationally (birational geometric crystal) and tropically
(piecewise-linear crystal operations).
"""

from .semifield import RATIONAL, format_rat, parse_rat


def adjacent(i, j, n):
    """Whether nodes i, j of the D_n^(1) Dynkin diagram are joined.

    The diagram is the chain 1-2-...-(n-1) with node 0 attached to 2 and
    node n attached to n-2; at n=3 the four nodes close into a cycle
    (0 and 3 both act on xbar_2, and 0-2, 1-2, 1-3 as usual).
    """
    a, b = min(i, j), max(i, j)
    if a == b:
        return False
    if n == 3 and (a, b) == (0, 3):
        return True
    if a == 0:
        return b == 2
    if b == n:
        return a == n - 2
    return b == a + 1 and b <= n - 1


def pairing(i, j, n):
    """Cartan pairing <alpha^vee_i, alpha_j> for D_n^(1); values 2, -1, 0."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError("index out of range")
    if i == j:
        return 2
    return -1 if adjacent(i, j, n) else 0


class GcPoint:
    """A point of the geometric crystal: rank n and 2n-1 coordinates.

    Coordinate order is (x_1, ..., x_n, xbar_{n-1}, ..., xbar_1).
    """

    __slots__ = ("n", "coords", "sf")

    def __init__(self, n, coords, sf=RATIONAL):
        if n < 3:
            raise ValueError("rank must be at least 3")
        coords = tuple(coords)
        if len(coords) != 2 * n - 1:
            raise ValueError("expected %d coordinates" % (2 * n - 1))
        if sf.is_positive_domain and not all(sf.valid(v) for v in coords):
            raise ValueError("coordinates must be positive")
        self.n = n
        self.coords = coords
        self.sf = sf

    def x(self, i):
        """x_i for 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.coords[i - 1]

    def xbar(self, i):
        """xbar_i for 1 <= i <= n-1."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(i)
        return self.coords[2 * self.n - 1 - i]

    def replace(self, updates):
        """New point with coordinates at the given 0-based slots replaced."""
        coords = list(self.coords)
        for k, v in updates.items():
            coords[k] = v
        return GcPoint(self.n, coords, self.sf)

    def _slot_x(self, i):
        return i - 1

    def _slot_xbar(self, i):
        return 2 * self.n - 1 - i

    def __eq__(self, other):
        return (isinstance(other, GcPoint) and self.n == other.n
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.n, self.coords))

    def __repr__(self):
        return "GcPoint(n=%d, %r)" % (self.n, self.coords)

    def to_json(self):
        if self.sf.is_positive_domain:
            enc = format_rat
        else:
            enc = lambda v: v
        return {
            "n": self.n,
            "x": [enc(self.x(i)) for i in range(1, self.n + 1)],
            "xbar": [enc(self.xbar(i)) for i in range(1, self.n)],
        }

    @classmethod
    def from_json(cls, obj, sf=RATIONAL):
        n = obj["n"]
        if sf.is_positive_domain:
            dec = lambda v: parse_rat(v) if isinstance(v, str) else sf.coerce(v)
        else:
            dec = int
        xs = [dec(v) for v in obj["x"]]
        xbars = [dec(v) for v in obj["xbar"]]
        if len(xs) != n or len(xbars) != n - 1:
            raise ValueError("coordinate count mismatch")
        return cls(n, xs + xbars[::-1], sf)


def level(p):
    """Product of all 2n-1 coordinates; conserved by every e_i^c."""
    sf = p.sf
    acc = p.coords[0]
    for v in p.coords[1:]:
        acc = sf.mul(acc, v)
    return acc


def eps(i, p):
    """The function epsilon_i on the geometric crystal."""
    sf, n, one = p.sf, p.n, p.sf.one
    if i == 0:
        return sf.mul(p.x(1), sf.add(sf.div(p.x(2), p.xbar(2)), one))
    if 1 <= i <= n - 2:
        return sf.mul(p.xbar(i), sf.add(sf.div(p.x(i + 1), p.xbar(i + 1)), one))
    if i == n - 1:
        return sf.mul(p.x(n), p.xbar(n - 1))
    if i == n:
        return p.xbar(n - 1)
    raise ValueError("index out of range")


def phi(i, p):
    """The function phi_i on the geometric crystal."""
    sf, n, one = p.sf, p.n, p.sf.one
    if i == 0:
        return sf.mul(p.xbar(1), sf.add(sf.div(p.xbar(2), p.x(2)), one))
    if 1 <= i <= n - 2:
        return sf.mul(p.x(i), sf.add(sf.div(p.xbar(i + 1), p.x(i + 1)), one))
    if i == n - 1:
        return p.x(n - 1)
    if i == n:
        return sf.mul(p.x(n - 1), p.x(n))
    raise ValueError("index out of range")


def gamma(i, p):
    return p.sf.div(phi(i, p), eps(i, p))


def _xi(k, c, p):
    # xi_k = (x_k + c*xbar_k) / (x_k + xbar_k)
    sf = p.sf
    return sf.div(sf.add(p.x(k), sf.mul(c, p.xbar(k))),
                  sf.add(p.x(k), p.xbar(k)))


def apply_e(i, c, p):
    """The transformation e_i^c; conserves the level."""
    sf, n = p.sf, p.n
    one = sf.one
    if sf.is_positive_domain and not sf.valid(c):
        raise ValueError("c must be positive")
    cinv = sf.div(one, c)
    if i == 0:
        xi = _xi(2, c, p)
        xiinv = sf.div(one, xi)
        return p.replace({
            p._slot_x(1): sf.mul(xiinv, p.x(1)),
            p._slot_x(2): sf.mul(sf.mul(cinv, xi), p.x(2)),
            p._slot_xbar(2): sf.mul(xi, p.xbar(2)),
            p._slot_xbar(1): sf.mul(sf.mul(c, xiinv), p.xbar(1)),
        })
    if 1 <= i <= n - 2:
        xi = _xi(i + 1, c, p)
        xiinv = sf.div(one, xi)
        return p.replace({
            p._slot_x(i): sf.mul(sf.mul(c, xiinv), p.x(i)),
            p._slot_x(i + 1): sf.mul(sf.mul(cinv, xi), p.x(i + 1)),
            p._slot_xbar(i + 1): sf.mul(xi, p.xbar(i + 1)),
            p._slot_xbar(i): sf.mul(xiinv, p.xbar(i)),
        })
    if i == n - 1:
        return p.replace({
            p._slot_x(n - 1): sf.mul(c, p.x(n - 1)),
            p._slot_x(n): sf.mul(cinv, p.x(n)),
        })
    if i == n:
        return p.replace({
            p._slot_x(n): sf.mul(c, p.x(n)),
            p._slot_xbar(n - 1): sf.mul(cinv, p.xbar(n - 1)),
        })
    raise ValueError("index out of range")


def weyl_s(i, p):
    """Weyl group generator s_i(x) = e_i^{1/gamma_i(x)}(x)."""
    return apply_e(i, p.sf.div(p.sf.one, gamma(i, p)), p)


def sigma1(p):
    """Involution swapping x_1 and xbar_1."""
    return p.replace({p._slot_x(1): p.xbar(1), p._slot_xbar(1): p.x(1)})


def sigman(p):
    """Involution x_{n-1} -> x_{n-1}x_n, xbar_{n-1} -> xbar_{n-1}x_n, x_n -> 1/x_n."""
    sf, n = p.sf, p.n
    return p.replace({
        p._slot_x(n - 1): sf.mul(p.x(n - 1), p.x(n)),
        p._slot_xbar(n - 1): sf.mul(p.xbar(n - 1), p.x(n)),
        p._slot_x(n): sf.div(sf.one, p.x(n)),
    })


def tau(p):
    """Involution x_i <-> xbar_i (i <= n-2) combined with sigma_n on the tail."""
    sf, n = p.sf, p.n
    updates = {}
    for i in range(1, n - 1):
        updates[p._slot_x(i)] = p.xbar(i)
        updates[p._slot_xbar(i)] = p.x(i)
    updates[p._slot_x(n - 1)] = sf.mul(p.xbar(n - 1), p.x(n))
    updates[p._slot_xbar(n - 1)] = sf.mul(p.x(n - 1), p.x(n))
    updates[p._slot_x(n)] = sf.div(sf.one, p.x(n))
    return p.replace(updates)


def star(pair):
    """The * automorphism on pairs: x_i <-> ybar_i, xbar_i <-> y_i, x_n <-> y_n."""
    x, y = pair
    n, sf = x.n, x.sf
    xs = [y.xbar(i) for i in range(1, n)] + [y.x(n)]
    xbars = [y.x(i) for i in range(1, n)]
    ys = [x.xbar(i) for i in range(1, n)] + [x.x(n)]
    ybars = [x.x(i) for i in range(1, n)]
    return (GcPoint(n, xs + xbars[::-1], sf),
            GcPoint(n, ys + ybars[::-1], sf))


def phi_pair(i, j, p):
    """The decomposition component phi_ij for an adjacent pair (i, j).

    Satisfies phi_ij + phi_ji = phi_i * phi_j, phi_ij(e_i^c(x)) = c*phi_ij(x),
    phi_ij(e_j^c(x)) = phi_ij(x).
    """
    n, sf, one = p.n, p.sf, p.sf.one
    if not adjacent(i, j, n):
        raise ValueError("pair not adjacent in the Dynkin diagram")
    # Node 0 reduces through sigma_1 (which exchanges the roles of 0 and 1),
    # node n through sigma_n (exchanging n and n-1).
    if i == 0 or j == 0:
        return phi_pair(1 if i == 0 else i, 1 if j == 0 else j, sigma1(p))
    if i == n or j == n:
        return phi_pair(n - 1 if i == n else i, n - 1 if j == n else j,
                        sigman(p))
    a, b = min(i, j), max(i, j)  # b == a + 1, 1 <= a <= n-2
    if a == n - 2:
        if i < j:
            return sf.mul(p.x(n - 2), p.xbar(n - 1))
        return sf.mul(p.x(n - 2), p.x(n - 1))
    bracket = sf.add(sf.div(p.xbar(a + 2), p.x(a + 2)), one)
    if i < j:
        return sf.mul(sf.mul(p.x(a), p.xbar(a + 1)), bracket)
    return sf.mul(sf.mul(p.x(a), p.x(a + 1)), bracket)


def eps_pair(i, j, p):
    """eps_ij = phi_ji / (gamma_i * gamma_j) for an adjacent pair."""
    sf = p.sf
    return sf.div(phi_pair(j, i, p), sf.mul(gamma(i, p), gamma(j, p)))


# ---------------------------------------------------------------------------
# L-fold products


def _prod_terms(i, xs):
    # monomials m_k = (prod_{j=2..k} eps_i(x^j)) * (prod_{j=k..L-1} phi_i(x^j))
    sf = xs[0].sf
    L = len(xs)
    es = [eps(i, p) for p in xs]
    ps = [phi(i, p) for p in xs]
    terms = []
    for k in range(1, L + 1):
        m = sf.one
        for j in range(2, k + 1):
            m = sf.mul(m, es[j - 1])
        for j in range(k, L):
            m = sf.mul(m, ps[j - 1])
        terms.append(m)
    return terms, es, ps


def prod_eps(i, xs):
    """epsilon_i of the L-fold product."""
    sf = xs[0].sf
    terms, es, ps = _prod_terms(i, xs)
    num = None
    for k, m in enumerate(terms, start=1):
        t = sf.mul(es[0], m)  # prod_{j=1..k} eps = eps(x^1) * prod_{j=2..k}
        num = t if num is None else sf.add(num, t)
    den = sf.one
    for j in range(1, len(xs)):
        den = sf.mul(den, ps[j - 1])
    return sf.div(num, den)


def prod_phi(i, xs):
    """phi_i of the L-fold product."""
    sf = xs[0].sf
    L = len(xs)
    es = [eps(i, p) for p in xs]
    ps = [phi(i, p) for p in xs]
    num = None
    for k in range(1, L + 1):
        m = sf.one
        for j in range(2, k + 1):
            m = sf.mul(m, es[j - 1])
        for j in range(k, L + 1):
            m = sf.mul(m, ps[j - 1])
        num = m if num is None else sf.add(num, m)
    den = sf.one
    for j in range(2, L + 1):
        den = sf.mul(den, es[j - 1])
    return sf.div(num, den)


def prod_apply_e(i, c, xs):
    """e_i^c on the L-fold product: componentwise e_i^{c_l}.

    c_l = S_l / S_{l-1} with S_l = sum_k c^{[k <= l]} m_k; the c_l multiply
    up to c.
    """
    sf = xs[0].sf
    terms, _, _ = _prod_terms(i, xs)
    L = len(xs)

    def s(l):
        acc = None
        for k, m in enumerate(terms, start=1):
            t = sf.mul(c, m) if k <= l else m
            acc = t if acc is None else sf.add(acc, t)
        return acc

    prev = s(0)
    out = []
    for l in range(1, L + 1):
        cur = s(l)
        out.append(apply_e(i, sf.div(cur, prev), xs[l - 1]))
        prev = cur
    return tuple(out)


def prod_phi_pair(i, j, pair):
    """phi_ij on a 2-fold product (used by the decomposition tests)."""
    x, y = pair
    sf = x.sf
    return sf.add(
        sf.add(phi_pair(i, j, y),
               sf.mul(sf.mul(phi(i, x), phi(j, y)), gamma(i, y))),
        sf.mul(phi_pair(i, j, x), sf.mul(gamma(i, y), gamma(j, y))))
