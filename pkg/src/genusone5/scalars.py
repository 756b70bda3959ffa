"""Exact scalar arithmetic helpers on top of gmpy2.

All rational numbers in this package are gmpy2.mpq values (normalized,
denominator > 0 by construction).  Integers are gmpy2.mpz.  This module
collects the handful of operations the rest of the code needs beyond the
raw mpq/mpz arithmetic: parsing/printing in the "p/q" interchange format,
exact square roots, and content (gcd) extraction for coefficient lists.
"""

from gmpy2 import mpq, mpz, gcd, isqrt, is_square

QQ = mpq
ZZ = mpz

Q0 = mpq(0)
Q1 = mpq(1)


def q_from_str(s):
    """Parse a rational from 'p/q' or 'p' text. Whitespace tolerated."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        d = mpz(den.strip())
        if d == 0:
            raise ValueError("zero denominator in %r" % s)
        return mpq(mpz(num.strip()), d)
    return mpq(mpz(s))


def q_to_str(q):
    """Render a rational as 'p' or 'p/q' (q > 1 only when needed)."""
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%s/%s" % (q.numerator, q.denominator)


class NotASquareError(ArithmeticError):
    pass


def exact_sqrt(r):
    """Exact square root of a nonnegative rational.

    Raises NotASquareError when r is not the square of a rational; the
    one internal caller treats that as evidence of a bug upstream.
    """
    r = mpq(r)
    if r < 0:
        raise NotASquareError("negative: %s" % r)
    num, den = r.numerator, r.denominator
    if not (is_square(num) and is_square(den)):
        raise NotASquareError("not a rational square: %s" % r)
    return mpq(isqrt(num), isqrt(den))


def content_of(values):
    """Positive rational c with values/c coprime integers (0 for all-zero).

    c = gcd(numerators) / lcm(denominators), the usual Gauss content.
    """
    num_gcd = mpz(0)
    den_lcm = mpz(1)
    for v in values:
        v = mpq(v)
        if v == 0:
            continue
        num_gcd = gcd(num_gcd, v.numerator)
        den_lcm = den_lcm * v.denominator // gcd(den_lcm, v.denominator)
    if num_gcd == 0:
        return Q0
    return mpq(num_gcd, den_lcm)
