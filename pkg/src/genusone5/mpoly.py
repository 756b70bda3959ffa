"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as {exponent tuple: mpq}, zero coefficients never kept.
The monomial order used for all serialized/printed output is graded
lexicographic, so output is reproducible bit for bit.

These polynomials carry essentially all symbolic data in the package:
quadrics and quintics in the w (or v) variables, two-variable forms in
the Hesse parameters, and mixed forms used by symbolic identity checks.
"""

from gmpy2 import mpq

from .scalars import content_of


class MPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = mpq(c)
                if c != 0:
                    self.terms[tuple(e)] = c

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(n):
        return MPoly(n)

    @staticmethod
    def const(n, c):
        c = mpq(c)
        p = MPoly(n)
        if c != 0:
            p.terms[(0,) * n] = c
        return p

    @staticmethod
    def var(n, i, power=1):
        e = [0] * n
        e[i] = power
        p = MPoly(n)
        p.terms[tuple(e)] = mpq(1)
        return p

    @staticmethod
    def linear_form(n, coeffs):
        p = MPoly(n)
        for i, c in enumerate(coeffs):
            c = mpq(c)
            if c != 0:
                e = [0] * n
                e[i] = 1
                p.terms[tuple(e)] = c
        return p

    def copy(self):
        q = MPoly(self.n)
        q.terms = dict(self.terms)
        return q

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
        p = MPoly(self.n)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly(self.n)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            assert other.n == self.n
            a, b = self.terms, other.terms
            if len(a) > len(b):
                a, b = b, a
            out = {}
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    s = out.get(e)
                    if s is None:
                        out[e] = ca * cb
                    else:
                        s = s + ca * cb
                        if s == 0:
                            del out[e]
                        else:
                            out[e] = s
            p = MPoly(self.n)
            p.terms = out
            return p
        try:
            c = mpq(other)
        except (TypeError, ValueError):
            return NotImplemented
        if c == 0:
            return MPoly(self.n)
        p = MPoly(self.n)
        p.terms = {e: k * c for e, k in self.terms.items()}
        return p

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = mpq(other)
        return self * (mpq(1) / c)

    def __pow__(self, k):
        assert k >= 0
        result = MPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            assert other.n == self.n, "variable count mismatch"
            return other
        try:
            return MPoly.const(self.n, mpq(other))
        except (TypeError, ValueError):
            return NotImplemented

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def graded_part(self, d):
        p = MPoly(self.n)
        p.terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return p

    def coeff(self, exponents):
        return self.terms.get(tuple(exponents), mpq(0))

    def content(self):
        return content_of(self.terms.values())

    def primitive_part(self):
        c = self.content()
        if c == 0:
            return self
        return self / c

    def derivative(self, i):
        p = MPoly(self.n)
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            p.terms[tuple(e2)] = c * e[i]
        return p

    def evaluate(self, point):
        """Evaluate at a full point (list of mpq scalars)."""
        point = [mpq(x) for x in point]
        total = mpq(0)
        powcache = [dict() for _ in range(self.n)]
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                pk = powcache[i].get(k)
                if pk is None:
                    pk = point[i] ** k
                    powcache[i][k] = pk
                v = v * pk
            total += v
        return total

    def substitute(self, replacements):
        """Substitute variable i -> replacements[i] (MPoly over m vars).

        All replacement polynomials must share a variable count; powers
        are cached per variable.
        """
        if not self.terms:
            return MPoly(replacements[0].n if replacements else self.n)
        m = replacements[0].n
        powcache = [dict() for _ in range(self.n)]

        def power(i, k):
            pk = powcache[i].get(k)
            if pk is None:
                pk = replacements[i] ** k
                powcache[i][k] = pk
            return pk

        out = MPoly(m)
        for e, c in self.terms.items():
            term = MPoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def div_exact(self, divisor):
        """Exact division by another polynomial; raises if not divisible.

        Peels leading terms in graded-lex order; for an exact quotient
        the leading monomial of the remainder is always divisible by the
        divisor's leading monomial, so the loop terminates with zero
        remainder.
        """
        if not isinstance(divisor, MPoly) or divisor.n != self.n:
            raise TypeError("divisor must be an MPoly in the same variables")
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        key = lambda e: (sum(e), e)
        dlead = max(divisor.terms, key=key)
        dcoef = divisor.terms[dlead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lead = max(rem, key=key)
            diff = tuple(l - d for l, d in zip(lead, dlead))
            if any(x < 0 for x in diff):
                raise ValueError("not exactly divisible")
            q = rem[lead] / dcoef
            quot[diff] = q
            for mono, mc in divisor.terms.items():
                tgt = tuple(m + d for m, d in zip(mono, diff))
                nv = rem.get(tgt, mpq(0)) - q * mc
                if nv:
                    rem[tgt] = nv
                else:
                    rem.pop(tgt, None)
        return MPoly(self.n, quot)

    # -- output --------------------------------------------------------

    def sorted_terms(self):
        """(exponent, coeff) pairs in graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def leading_coeff(self):
        st = self.sorted_terms()
        return st[-1][1] if st else mpq(0)

    def to_string(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = ["x%d" % i for i in range(self.n)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] + ("^%d" % k if k > 1 else "")
                for i, k in enumerate(e) if k
            )
            if mono:
                parts.append("%s*%s" % (c, mono) if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)

    def __repr__(self):
        return "MPoly(%d, %s)" % (self.n, self.to_string())


def mpoly_from_coeff_map(n, mapping):
    return MPoly(n, mapping)
