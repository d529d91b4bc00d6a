"""Small exact linear algebra over Fraction: products, transpose, Bareiss det."""

import math
from fractions import Fraction


def zeros(m, k=None):
    k = m if k is None else k
    return [[Fraction(0)] * k for _ in range(m)]


def identity(m):
    out = zeros(m)
    for i in range(m):
        out[i][i] = Fraction(1)
    return out


def mat_mul(a, b):
    m, k, k2, p = len(a), len(a[0]), len(b), len(b[0])
    if k != k2:
        raise ValueError("shape mismatch")
    bt = list(zip(*b))
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in bt] for ra in a]


def mat_mul_many(mats):
    acc = mats[0]
    for m in mats[1:]:
        acc = mat_mul(acc, m)
    return acc


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_scale(a, s):
    return [[v * s for v in row] for row in a]


def mat_eq(a, b):
    return a == b


def det_bareiss(a):
    """Determinant by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; the integer elimination keeps
    intermediate entries as true minors, bounding coefficient swell.
    """
    m = len(a)
    if m == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in a:
        d = math.lcm(*(Fraction(v).denominator for v in row))
        scale *= d
        rows.append([int(v * d) for v in row])
    sign = 1
    prev = 1
    for k in range(m - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, m):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                rows[i][j] = (rows[i][j] * rows[k][k]
                              - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return Fraction(sign * rows[m - 1][m - 1], scale)
