"""Pluggable exact semifield arithmetic.

Two instantiations are provided: positive arbitrary-precision rationals
with (+, *, /) and max-plus numbers with (max, +, -).  Any subtraction-free
formula written against the abstraction runs unchanged in both; evaluating
it in the max-plus semifield is exactly ultradiscretization.

No additive zero is provided on purpose: every formula in scope is a sum of
a nonempty set of monomials.
"""

from fractions import Fraction


def rat(p, q=1):
    """Exact rational p/q in lowest terms.  q must be nonzero."""
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(p, q)


def parse_rat(s):
    """Parse "p/q" or "p" into a Fraction."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return rat(int(p), int(q))
    return Fraction(int(s))


def format_rat(r):
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


class RationalSemifield:
    """(Q_{>0}, +, *, /) with exact arithmetic."""

    name = "rational"
    is_positive_domain = True
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def valid(a):
        return a > 0

    @staticmethod
    def coerce(v):
        return Fraction(v)


class TropicalSemifield:
    """(Z, max, +, -): the max-plus semifield.

    The carrier is integers by default; rational values are also accepted
    for generic-position tests.
    """

    name = "tropical"
    is_positive_domain = False
    one = 0

    @staticmethod
    def add(a, b):
        return a if a >= b else b

    @staticmethod
    def mul(a, b):
        return a + b

    @staticmethod
    def div(a, b):
        return a - b

    @staticmethod
    def valid(a):
        return True

    @staticmethod
    def coerce(v):
        return v


RATIONAL = RationalSemifield()
TROPICAL = TropicalSemifield()

SEMIFIELDS = {"rational": RATIONAL, "tropical": TROPICAL}


def sf_eval_check(sf, a, b, c):
    """Distributivity witness: mul(a, add(b,c)) == add(mul(a,b), mul(a,c))."""
    return sf.mul(a, sf.add(b, c)) == sf.add(sf.mul(a, b), sf.mul(a, c))
