"""Covariant values shaped as "5 quadrics with an index slot".

Four of the eight covariant families take values in a space of the form
(index factor) x Sym^2(form factor): five quadratic forms, one per
index.  We store the five quadrics as sparse polynomials in 5 variables
together with a space tag naming both factors, written "index.forms":

    Vd.S2W   - index in the dual v-basis, quadrics in w   (Pfaffian family)
    S2V.W    - index in the w-basis, quadrics in v
    V.S2Wd   - index in the v-basis, quadrics in the dual w-basis
    S2Vd.Wd  - index in the dual w-basis, quadrics in the dual v-basis

The tag fixes how a group pair (g_V, g_W) moves the value: the index
transforms by the matrix acting on its basis (inverse-transpose for dual
factors) and the quadrics by linear substitution of their variables.
"""

from gmpy2 import mpq

from .linalg import mat_inverse, transpose
from .mpoly import MPoly
from .scalars import content_of, q_to_str

QT_SPACES = ("Vd.S2W", "S2V.W", "V.S2Wd", "S2Vd.Wd")

# (index role, form role); roles name which of the four basis matrices applies
_ROLES = {
    "Vd.S2W": ("Vd", "W"),
    "S2V.W": ("W", "V"),
    "V.S2Wd": ("V", "Wd"),
    "S2Vd.Wd": ("Wd", "Vd"),
}


class QuadricTuple:
    __slots__ = ("space", "polys")

    def __init__(self, space, polys):
        assert space in QT_SPACES
        polys = tuple(polys)
        assert len(polys) == 5
        for p in polys:
            assert isinstance(p, MPoly) and p.n == 5
        self.space = space
        self.polys = polys

    @staticmethod
    def zero(space):
        return QuadricTuple(space, [MPoly.zero(5)] * 5)

    def __add__(self, other):
        assert self.space == other.space
        return QuadricTuple(self.space, [a + b for a, b in zip(self.polys, other.polys)])

    def __sub__(self, other):
        assert self.space == other.space
        return QuadricTuple(self.space, [a - b for a, b in zip(self.polys, other.polys)])

    def scale(self, t):
        t = mpq(t)
        return QuadricTuple(self.space, [p * t for p in self.polys])

    def __rmul__(self, t):
        return self.scale(t)

    def __eq__(self, other):
        return (isinstance(other, QuadricTuple) and self.space == other.space
                and self.polys == other.polys)

    def __hash__(self):
        return hash((self.space, self.polys))

    def is_zero(self):
        return all(p.is_zero() for p in self.polys)

    def content(self):
        cs = [c for p in self.polys for _, c in p.terms.items()]
        return content_of(cs)

    def coefficient_vector(self):
        """All 75 coefficients in a fixed order: index major, then the 15
        monomials v_a v_b (a <= b) in lexicographic order of (a, b)."""
        out = []
        for p in self.polys:
            for a in range(5):
                for b in range(a, 5):
                    e = [0] * 5
                    e[a] += 1
                    e[b] += 1
                    out.append(p.coeff(tuple(e)))
        return out

    def symmetric_coeffs(self, k):
        """Quadric k as a dict {(a, b) a<=b: coefficient}."""
        out = {}
        for e, c in self.polys[k].terms.items():
            idx = []
            for i, m in enumerate(e):
                idx.extend([i] * m)
            assert len(idx) == 2, "entry is not a quadratic form"
            out[(idx[0], idx[1])] = c
        return out

    def transform(self, g_V, g_W):
        """Move by (g_V, g_W) acting on basis vectors of V and W."""
        gv = [[mpq(x) for x in row] for row in g_V]
        gw = [[mpq(x) for x in row] for row in g_W]
        mats = {
            "V": gv, "W": gw,
            "Vd": transpose(mat_inverse(gv)),
            "Wd": transpose(mat_inverse(gw)),
        }
        idx_role, form_role = _ROLES[self.space]
        I = mats[idx_role]
        S = mats[form_role]
        # basis vector y_k of the form space maps to sum_a S[a][k] y_a
        repl = [MPoly.linear_form(5, [S[a][k] for a in range(5)]) for k in range(5)]
        subbed = [p.substitute(repl) for p in self.polys]
        new = []
        for i in range(5):
            acc = MPoly.zero(5)
            for j in range(5):
                if I[i][j]:
                    acc = acc + subbed[j] * I[i][j]
            new.append(acc)
        return QuadricTuple(self.space, new)

    def to_text(self):
        names = {
            "V": "v", "W": "w", "Vd": "v*", "Wd": "w*",
        }
        idx_role, form_role = _ROLES[self.space]
        var = names[form_role]
        lines = ["space %s" % self.space]
        vnames = ["%s%d" % (var, i) for i in range(5)]
        for i, p in enumerate(self.polys):
            lines.append("[%s%d] %s" % (names[idx_role], i, p.to_string(vnames)))
        return "\n".join(lines)

    def coefficient_strings(self):
        return [q_to_str(c) for c in self.coefficient_vector()]

    def __repr__(self):
        return "QuadricTuple(%r)" % self.space


def polarized_pair(X, F, G):
    """Substitute two argument tuples into the quadrics of X, polarized.

    X carries quadrics q_i(y) = sum c_ab y_a y_b; the symmetric bilinear
    version is B_i(F, G) = sum_a c_aa F_a G_a
    + sum_{a<b} c_ab (F_a G_b + F_b G_a)/2, so that B_i(F, F) recovers
    plain substitution y := F.  Returns sum_i x_i * B_i(F, G) where x_i
    is the variable attached to X's index slot, a polynomial in the
    common ring of F and G.
    """
    assert len(F) == 5 and len(G) == 5
    half = mpq(1, 2)
    total = MPoly.zero(5)
    for i in range(5):
        coeffs = X.symmetric_coeffs(i)
        if not coeffs:
            continue
        acc = MPoly.zero(5)
        for (a, b), c in coeffs.items():
            if a == b:
                acc = acc + F[a] * G[a] * c
            else:
                acc = acc + (F[a] * G[b] + F[b] * G[a]) * (c * half)
        total = total + acc * MPoly.var(5, i)
    return total


def pfaffian_tuple(model):
    """P-map of a model: its five signed 4x4 Pfaffian quadrics, tagged by
    the space dual to the model's pair index."""
    space = {
        "primal": "Vd.S2W",
        "dual": "V.S2Wd",
        "w_primal": "S2Vd.Wd",
        "w_dual": "S2V.W",
    }[model.space]
    return QuadricTuple(space, model.pfaffian_quadrics())
