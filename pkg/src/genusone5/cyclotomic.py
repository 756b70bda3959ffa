"""The field Q(zeta) with zeta a fixed primitive fifth root of unity.

Elements are stored on the power basis 1, z, z^2, z^3 with
z^4 = -1 - z - z^2 - z^3.  Only this one field is needed (the group
machinery lives inside it), so nothing here is generic over number
fields.
"""

from gmpy2 import mpq

_MINPOLY_TAIL = (mpq(-1), mpq(-1), mpq(-1), mpq(-1))  # z^4 = -(1+z+z^2+z^3)


class CycQ5:
    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (mpq(c0), mpq(c1), mpq(c2), mpq(c3))

    @staticmethod
    def _raw(tup):
        x = CycQ5.__new__(CycQ5)
        x.c = tup
        return x

    @staticmethod
    def zeta_pow(k):
        """zeta^k for any integer k (reduced mod 5)."""
        k %= 5
        if k < 4:
            t = [mpq(0)] * 4
            t[k] = mpq(1)
            return CycQ5._raw(tuple(t))
        return CycQ5._raw(_MINPOLY_TAIL)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return CycQ5._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return CycQ5._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        # multiply as exponents 0..6, fold z^5 = 1, then z^4 -> tail
        prod = [mpq(0)] * 7
        for i in range(4):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(4):
                if b[j] != 0:
                    prod[i + j] += ai * b[j]
        red = [prod[0] + prod[5], prod[1] + prod[6], prod[2], prod[3]]
        if prod[4] != 0:
            p4 = prod[4]
            red = [red[k] - p4 for k in range(4)]
        return CycQ5._raw(tuple(red))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def galois(self, k):
        """Apply zeta -> zeta^k (k coprime to 5)."""
        assert k % 5 != 0
        out = CycQ5(self.c[0])
        for i in range(1, 4):
            if self.c[i] != 0:
                out = out + CycQ5.zeta_pow(i * k) * CycQ5(self.c[i])
        return out

    def norm(self):
        """Field norm to Q (product of the four conjugates)."""
        n = self
        for k in (2, 3, 4):
            n = n * self.galois(k)
        assert n.is_rational(), "norm not rational: %r" % (n,)
        return n.c[0]

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("CycQ5 inverse of 0")
        conj = CycQ5(1)
        for k in (2, 3, 4):
            conj = conj * self.galois(k)
        n = (self * conj).c[0]
        return conj * CycQ5(mpq(1) / n)

    def is_zero(self):
        return all(x == 0 for x in self.c)

    def is_rational(self):
        return all(x == 0 for x in self.c[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.c[0]

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        names = ("", "z", "z^2", "z^3")
        parts = []
        for coef, name in zip(self.c, names):
            if coef == 0:
                continue
            parts.append(("%s" % coef) + (("*" + name) if name else ""))
        return " + ".join(parts) if parts else "0"


def _coerce(x):
    if isinstance(x, CycQ5):
        return x
    if isinstance(x, (int, type(mpq(0)), type(mpq(1, 2).numerator))):
        return CycQ5(x)
    try:
        return CycQ5(mpq(x))
    except (TypeError, ValueError):
        return NotImplemented


ZETA = CycQ5.zeta_pow(1)
# golden-ratio element 1 + zeta + zeta^4, a square root of (phi^2 = phi + 1)
PHI = CycQ5(1) + ZETA + CycQ5.zeta_pow(4)
