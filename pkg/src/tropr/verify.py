"""Named property checks behind the `verify` command.

Each check runs a number of seeded random (or exhaustive) trials of one of
the identities implemented by the library and reports pass/fail counts with
failing witnesses.  All comparisons are exact.
"""

import random
from fractions import Fraction

from . import crystal as cr
from . import geom_crystal as gc
from . import matrix_real as mr
from .tropical_r import (_v_explicit, full_table, pair_sigma1, tropical_r,
                         v0 as r_v0)
from .matrices import mat_mul_many

RAT_BOUND = 1 << 16


def rand_rat(rng):
    return Fraction(rng.randint(1, RAT_BOUND), rng.randint(1, RAT_BOUND))


def rand_point(n, rng):
    return gc.GcPoint(n, [rand_rat(rng) for _ in range(2 * n - 1)])


def rand_z(rng, avoid=()):
    while True:
        z = rand_rat(rng)
        if z not in avoid:
            return z


def _distinct_levels(points):
    levels = [gc.level(p) for p in points]
    return len(set(levels)) == len(levels)


def rand_points_distinct(n, count, rng):
    while True:
        pts = [rand_point(n, rng) for _ in range(count)]
        if _distinct_levels(pts):
            return pts


def _chain_apply(i, c, xs):
    # e_i^c on a tuple, as a tuple again
    return gc.prod_apply_e(i, c, xs)


class CheckReport:
    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.witnesses = []

    def record(self, ok, witness=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if witness is not None and len(self.witnesses) < 5:
                self.witnesses.append(witness)

    def to_json(self):
        return {"check": self.name, "passed": self.passed,
                "failed": self.failed, "witnesses": self.witnesses}


def _point_witness(p):
    return p.to_json()


def check_axioms(n, trials, rng, **opts):
    """Pre-crystal axioms on single points and on 3-fold products."""
    rep = CheckReport("axioms")
    for _ in range(trials):
        p = rand_point(n, rng)
        c1, c2 = rand_rat(rng), rand_rat(rng)
        ok = True
        for i in range(n + 1):
            if gc.apply_e(i, Fraction(1), p) != p:
                ok = False
            if gc.apply_e(i, c1, gc.apply_e(i, c2, p)) != gc.apply_e(i, c1 * c2, p):
                ok = False
            q = gc.apply_e(i, c1, p)
            if gc.eps(i, q) != gc.eps(i, p) / c1 or gc.phi(i, q) != c1 * gc.phi(i, p):
                ok = False
            for j in range(n + 1):
                if gc.gamma(i, gc.apply_e(j, c1, p)) != \
                        c1 ** gc.pairing(i, j, n) * gc.gamma(i, p):
                    ok = False
        xs = tuple(rand_points_distinct(n, 3, rng))
        for i in range(n + 1):
            if _chain_apply(i, Fraction(1), xs) != xs:
                ok = False
            if _chain_apply(i, c1, _chain_apply(i, c2, xs)) != \
                    _chain_apply(i, c1 * c2, xs):
                ok = False
            ys = _chain_apply(i, c1, xs)
            if gc.prod_eps(i, ys) != gc.prod_eps(i, xs) / c1:
                ok = False
            if gc.prod_phi(i, ys) != c1 * gc.prod_phi(i, xs):
                ok = False
        rep.record(ok, _point_witness(p))
    return rep


def check_verma(n, trials, rng, **opts):
    """Commutation and length-three braid moves of the e_i^c."""
    rep = CheckReport("verma")
    for _ in range(trials):
        p = rand_point(n, rng)
        c1, c2 = rand_rat(rng), rand_rat(rng)
        ok = True
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                pij = gc.pairing(i, j, n)
                if pij == 0:
                    if gc.apply_e(i, c1, gc.apply_e(j, c2, p)) != \
                            gc.apply_e(j, c2, gc.apply_e(i, c1, p)):
                        ok = False
                elif pij == -1:
                    lhs = gc.apply_e(
                        i, c1, gc.apply_e(j, c1 * c2, gc.apply_e(i, c2, p)))
                    rhs = gc.apply_e(
                        j, c2, gc.apply_e(i, c1 * c2, gc.apply_e(j, c1, p)))
                    if lhs != rhs:
                        ok = False
        xs = tuple(rand_points_distinct(n, 3, rng))
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                pij = gc.pairing(i, j, n)
                if pij == 0:
                    if _chain_apply(i, c1, _chain_apply(j, c2, xs)) != \
                            _chain_apply(j, c2, _chain_apply(i, c1, xs)):
                        ok = False
                elif pij == -1:
                    lhs = _chain_apply(
                        i, c1, _chain_apply(j, c1 * c2, _chain_apply(i, c2, xs)))
                    rhs = _chain_apply(
                        j, c2, _chain_apply(i, c1 * c2, _chain_apply(j, c1, xs)))
                    if lhs != rhs:
                        ok = False
        rep.record(ok, _point_witness(p))
    return rep


def check_msms(n, trials, rng, **opts):
    rep = CheckReport("msms")
    zcount = opts.get("zsamples", 1)
    for _ in range(trials):
        p = rand_point(n, rng)
        ok = all(mr.check_MSMS(p, rand_rat(rng)) for _ in range(zcount))
        rep.record(ok, _point_witness(p))
    return rep


def check_det(n, trials, rng, **opts):
    rep = CheckReport("det")
    zcount = opts.get("zsamples", 1)
    for _ in range(trials):
        p = rand_point(n, rng)
        ok = True
        for _ in range(zcount):
            z = rand_rat(rng)
            if mr.det_M(p, z) != (1 - z * gc.level(p)) ** (2 * n):
                ok = False
        rep.record(ok, _point_witness(p))
    return rep


def check_rank1(n, trials, rng, **opts):
    rep = CheckReport("rank1")
    for _ in range(trials):
        p = rand_point(n, rng)
        rep.record(mr.check_rank_one(p), _point_witness(p))
    return rep


def check_gmg(n, trials, rng, **opts):
    rep = CheckReport("gmg")
    for _ in range(trials):
        p = rand_point(n, rng)
        c = rand_rat(rng)
        z = rand_z(rng)
        ok = all(mr.check_GMG(i, c, p, z) for i in range(n + 1))
        xs = rand_points_distinct(n, 3, rng)
        ok = ok and all(mr.check_prod_GMG(i, c, xs, z) for i in range(n + 1))
        rep.record(ok, _point_witness(p))
    return rep


def check_jmj(n, trials, rng, **opts):
    rep = CheckReport("jmj")
    for _ in range(trials):
        p = rand_point(n, rng)
        y = rand_point(n, rng)
        z = rand_z(rng)
        rep.record(mr.check_JMJ(p, z, y), _point_witness(p))
    return rep


def check_recover(n, trials, rng, **opts):
    rep = CheckReport("recover")
    for _ in range(trials):
        L = rng.choice([1, 2, 3])
        xs = rand_points_distinct(n, L, rng)

        def mprod(z, xs=xs):
            return mat_mul_many([mr.build_M(p, z) for p in xs])

        got = mr.recover_components([gc.level(p) for p in xs], mprod, n)
        ok = list(got) == list(xs)
        try:
            mr.recover_components([Fraction(2), Fraction(2)], mprod, n)
            ok = False
        except ValueError:
            pass
        rep.record(ok, [_point_witness(p) for p in xs])
    return rep


def _rpairs_equal(a, b):
    return tuple(a) == tuple(b)


def check_inversion(n, trials, rng, **opts):
    rep = CheckReport("inversion")
    for _ in range(trials):
        x, y = rand_points_distinct(n, 2, rng)
        rep.record(_rpairs_equal(tropical_r(tropical_r((x, y))), (x, y)),
                   [_point_witness(x), _point_witness(y)])
    return rep


def check_ybe(n, trials, rng, **opts):
    rep = CheckReport("ybe")

    def r12(t):
        a, b = tropical_r((t[0], t[1]))
        return a, b, t[2]

    def r23(t):
        b, c = tropical_r((t[1], t[2]))
        return t[0], b, c

    for _ in range(trials):
        t = tuple(rand_points_distinct(n, 3, rng))
        rep.record(r12(r23(r12(t))) == r23(r12(r23(t))),
                   [_point_witness(p) for p in t])
    return rep


def check_equivariance(n, trials, rng, **opts):
    """R commutes with every e_i^c and with the sigma_1/sigma_n/* maps."""
    rep = CheckReport("equivariance")
    for _ in range(trials):
        pair = tuple(rand_points_distinct(n, 2, rng))
        c = rand_rat(rng)
        ok = True
        rp = tropical_r(pair)
        for i in range(n + 1):
            if tropical_r(gc.prod_apply_e(i, c, pair)) != \
                    gc.prod_apply_e(i, c, rp):
                ok = False
        if tropical_r(pair_sigma1(pair)) != pair_sigma1(rp):
            ok = False
        sn = (gc.sigman(pair[0]), gc.sigman(pair[1]))
        if tropical_r(sn) != (gc.sigman(rp[0]), gc.sigman(rp[1])):
            ok = False
        if tropical_r(gc.star(pair)) != gc.star(rp):
            ok = False
        # eps/phi of the pair are conserved
        for i in range(n + 1):
            if gc.prod_eps(i, pair) != gc.prod_eps(i, rp):
                ok = False
            if gc.prod_phi(i, pair) != gc.prod_phi(i, rp):
                ok = False
        rep.record(ok, [_point_witness(p) for p in pair])
    return rep


def check_invariance_table(n, trials, rng, **opts):
    """The ledger of V/W values fixed or exchanged by R and the symmetries."""
    rep = CheckReport("invariance-table")
    for _ in range(trials):
        pair = tuple(rand_points_distinct(n, 2, rng))
        vt = full_table(pair)
        rp = tropical_r(pair)
        vtr = full_table(rp)
        ok = (vtr.v[0] == vt.v[0] and vtr.v0_s1 == vt.v0_s1
              and vtr.v[n - 1] == vt.v[n - 1]
              and vtr.vstar[n - 1] == vt.vstar[n - 1]
              and vtr.w == vt.w)
        for i in range(1, n - 1):
            if vtr.v[i] != vt.w[i] / vt.vstar[i]:
                ok = False
            if vtr.vstar[i] != vt.w[i] / vt.v[i]:
                ok = False
        # symmetry ledger on the inputs
        if r_v0(gc.star(pair)) != vt.v[0]:
            ok = False
        sn = (gc.sigman(pair[0]), gc.sigman(pair[1]))
        if r_v0(sn) != vt.v[0]:
            ok = False
        s1 = pair_sigma1(pair)
        if _v_explicit(n - 1, s1) != vt.v[n - 1]:
            ok = False
        rep.record(ok, [_point_witness(p) for p in pair])
    return rep


def check_energy_recursion(n, trials, rng, **opts):
    """V_0 under e_i^c (rational) and the +-1/0 rule for the energy."""
    l1, l2 = opts.get("l1", 2), opts.get("l2", 1)
    rep = CheckReport("energy-recursion")
    for _ in range(trials):
        pair = tuple(rand_points_distinct(n, 2, rng))
        c = rand_rat(rng)
        rp = tropical_r(pair)
        x, y = pair
        xp, yp = rp
        ok = True
        for i in range(n + 1):
            moved = r_v0(gc.prod_apply_e(i, c, pair))
            if i == 0:
                factor = ((c * gc.phi(0, xp) + gc.eps(0, yp))
                          / (gc.phi(0, xp) + gc.eps(0, yp))
                          * (c * gc.phi(0, x) + gc.eps(0, y))
                          / (c * gc.phi(0, x) + c * gc.eps(0, y)))
            else:
                factor = Fraction(1)
            if moved != r_v0(pair) * factor:
                ok = False
        rep.record(ok, [_point_witness(p) for p in pair])
    # combinatorial shadow, exhaustive on B'_{l1} x B'_{l2}
    elems1 = cr.enumerate_crystal(l1, n)
    elems2 = cr.enumerate_crystal(l2, n)
    emin = None
    for a in elems1:
        for b in elems2:
            pair = (a, b)
            e0 = cr.energy(pair)
            emin = e0 if emin is None else min(emin, e0)
            xp, yp = cr.comb_r(pair)
            ok = True
            for i in range(n + 1):
                moved = cr.tensor_apply_e(i, 1, pair)
                if moved is None:
                    continue
                delta = cr.energy(moved) - e0
                if i == 0:
                    want = (int(cr.c_phi(0, xp) >= cr.c_eps(0, yp))
                            - int(cr.c_phi(0, a) < cr.c_eps(0, b)))
                else:
                    want = 0
                if delta != want:
                    ok = False
            rep.record(ok, [a.to_json(), b.to_json()])
    rep.record(emin == abs(l1 - l2), {"min_energy": emin})
    return rep


def check_ud_consistency(n, trials, rng, **opts):
    """Max-plus evaluation vs. the direct piecewise transcription."""
    l1, l2 = opts.get("l1", 2), opts.get("l2", 1)
    rep = CheckReport("ud-consistency")
    for a in cr.enumerate_crystal(l1, n):
        for b in cr.enumerate_crystal(l2, n):
            ok = cr.comb_r((a, b)) == cr.piecewise_r((a, b))
            ga, gb = a.to_gc(), b.to_gc()
            for i in range(n + 1):
                if cr.c_eps(i, a) != gc.eps(i, ga):
                    ok = False
                if cr.c_phi(i, b) != gc.phi(i, gb):
                    ok = False
            rep.record(ok, [a.to_json(), b.to_json()])
    return rep


def check_oracle_diff(n, trials, rng, **opts):
    """Propagation oracle vs. the max-plus combinatorial R, element by element."""
    l1, l2 = opts.get("l1", 2), opts.get("l2", 1)
    rep = CheckReport("oracle-diff")
    mapping = cr.oracle_r(l1, l2, n)
    for pair, want in mapping.items():
        rep.record(cr.comb_r(pair) == want,
                   [pair[0].to_json(), pair[1].to_json()])
    return rep


CHECKS = {
    "axioms": check_axioms,
    "verma": check_verma,
    "msms": check_msms,
    "det": check_det,
    "rank1": check_rank1,
    "gmg": check_gmg,
    "jmj": check_jmj,
    "recover": check_recover,
    "ybe": check_ybe,
    "inversion": check_inversion,
    "equivariance": check_equivariance,
    "invariance-table": check_invariance_table,
    "energy-recursion": check_energy_recursion,
    "ud-consistency": check_ud_consistency,
    "oracle-diff": check_oracle_diff,
}

def run_check(name, n, trials, seed, **opts):
    if name not in CHECKS:
        raise KeyError(name)
    rng = random.Random(seed)
    return CHECKS[name](n, trials, rng, **opts)
