"""Binary forms: homogeneous polynomials in two variables (x, y).

Coefficients are stored densely, coeffs[i] multiplying x^(d-i) y^i.
The coefficient ring is anything with +, -, * and a zero test: exact
rationals (mpq) for numeric work, MPoly for symbolic identities.
"""

from gmpy2 import mpq


def _is_zero(c):
    terms = getattr(c, "terms", None)
    if terms is not None:
        return not terms
    return c == 0


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        assert coeffs, "empty coefficient list"
        self.degree = len(coeffs) - 1
        self.coeffs = coeffs

    @staticmethod
    def from_map(degree, mapping):
        """mapping: {i: coeff of x^(d-i) y^i}; absent entries are 0."""
        coeffs = [mpq(0)] * (degree + 1)
        for i, c in mapping.items():
            coeffs[i] = c
        return BinaryForm(coeffs)

    def __add__(self, other):
        assert self.degree == other.degree
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        assert self.degree == other.degree
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [None] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if _is_zero(b):
                        continue
                    p = a * b
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
            zero = self.coeffs[0] * 0
            return BinaryForm([zero if c is None else c for c in out])
        return BinaryForm([a * other for a in self.coeffs])

    __rmul__ = __mul__

    def scale(self, c):
        return BinaryForm([a * c for a in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, BinaryForm)
                and self.degree == other.degree
                and all(_is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def coeff(self, x_power):
        """Coefficient of x^x_power y^(d - x_power)."""
        return self.coeffs[self.degree - x_power]

    def deriv_x(self):
        d = self.degree
        if d == 0:
            return BinaryForm([self.coeffs[0] * 0])
        return BinaryForm([self.coeffs[i] * (d - i) for i in range(d)])

    def deriv_y(self):
        d = self.degree
        if d == 0:
            return BinaryForm([self.coeffs[0] * 0])
        return BinaryForm([self.coeffs[i + 1] * (i + 1) for i in range(d)])

    def evaluate(self, x, y):
        total = None
        d = self.degree
        for i, c in enumerate(self.coeffs):
            v = c * (x ** (d - i)) * (y ** i)
            total = v if total is None else total + v
        return total

    def substitute_linear(self, a, b, c, d):
        """Replace x <- a x + b y, y <- c x + d y."""
        deg = self.degree
        xi = BinaryForm([a * 1, b * 1])
        eta = BinaryForm([c * 1, d * 1])
        result = None
        for i, coef in enumerate(self.coeffs):
            if _is_zero(coef):
                continue
            term = BinaryForm([coef])
            for _ in range(deg - i):
                term = term * xi
            for _ in range(i):
                term = term * eta
            result = term if result is None else result + term
        if result is None:
            return BinaryForm([self.coeffs[0] * 0] * (deg + 1))
        return result

    def __repr__(self):
        return "BinaryForm(%s)" % (self.coeffs,)


def hessian_det(form):
    """F_xx*F_yy - F_xy^2 of a binary form (a binary form of degree 2d-4)."""
    fxx = form.deriv_x().deriv_x()
    fyy = form.deriv_y().deriv_y()
    fxy = form.deriv_x().deriv_y()
    return fxx * fyy - fxy * fxy


def jacobian_det(f, g):
    """F_x*G_y - F_y*G_x of two binary forms."""
    return f.deriv_x() * g.deriv_y() - f.deriv_y() * g.deriv_x()
