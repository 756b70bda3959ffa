"""Genus one models of degree 5 and the operations tied directly to the
matrix presentation: the two-parameter invariant family u(a,b), group
action, 4x4 Pfaffian quadrics and the secant quintic.

A model is a 5x5 alternating matrix of linear forms in w0..w4: stored as
the 10 upper-triangle entries in the fixed order
(0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4), each entry
a tuple of 5 rational coefficients.  The same container also carries
matrices whose rows/columns live in a dual basis (outputs of doubling
and of the visibility pencil); the `space` tag records which basis pair
is meant and changes nothing about the arithmetic.
"""

import json
import random

from gmpy2 import mpq

from .linalg import det_poly, mat_inverse, pfaffian4, transpose
from .mpoly import MPoly
from .scalars import content_of, q_from_str, q_to_str

PAIRS = ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
PAIR_INDEX = {p: i for i, p in enumerate(PAIRS)}

# Which basis pair the matrix presentation refers to:
#   primal   - rows/cols indexed by the v-basis, entries linear in w
#   dual     - rows/cols indexed by the dual v*-basis, entries linear in w*
#   w_primal - rows/cols indexed by the w-basis, entries linear in v*
#   w_dual   - rows/cols indexed by the dual w*-basis, entries linear in v
SPACES = ("primal", "dual", "w_primal", "w_dual")


class SingularModelError(ValueError):
    """Raised by operations that require a nonsingular model."""


class GenusOneModel:
    __slots__ = ("entries", "space")

    def __init__(self, entries, space="primal"):
        assert len(entries) == 10
        assert space in SPACES
        self.entries = tuple(tuple(mpq(c) for c in e) for e in entries)
        for e in self.entries:
            assert len(e) == 5
        self.space = space

    # -- basic structure ----------------------------------------------

    def entry(self, i, j):
        """Signed coefficient vector of the (i,j) matrix entry."""
        if i == j:
            return (mpq(0),) * 5
        if i < j:
            return self.entries[PAIR_INDEX[(i, j)]]
        return tuple(-c for c in self.entries[PAIR_INDEX[(j, i)]])

    def matrix(self):
        """5x5 matrix of MPoly linear forms in the 5 ambient variables."""
        return [[MPoly.linear_form(5, self.entry(i, j)) for j in range(5)] for i in range(5)]

    def is_zero(self):
        return all(c == 0 for e in self.entries for c in e)

    def content(self):
        return content_of([c for e in self.entries for c in e])

    def coefficients(self):
        """All 50 coefficients in serialization order."""
        return [c for e in self.entries for c in e]

    # -- arithmetic (used for pencils) ---------------------------------

    def scale(self, t):
        t = mpq(t)
        return GenusOneModel([[c * t for c in e] for e in self.entries], self.space)

    def __add__(self, other):
        assert isinstance(other, GenusOneModel) and other.space == self.space
        return GenusOneModel(
            [[a + b for a, b in zip(e1, e2)] for e1, e2 in zip(self.entries, other.entries)],
            self.space)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, GenusOneModel)
                and self.space == other.space and self.entries == other.entries)

    def __hash__(self):
        return hash((self.space, self.entries))

    def primitive_part(self):
        c = self.content()
        if c == 0:
            return self
        return self.scale(1 / c)

    # -- covariant front line ------------------------------------------

    def pfaffian_quadrics(self):
        """The five 4x4 Pfaffian quadrics p_0..p_4 (P2 covariant).

        p_i = (-1)^i Pf(matrix with row/column i deleted); this sign
        choice makes the u(a,b) restriction come out as
        a*b*w_i^2 + b^2 w_{i-1}w_{i+1} - a^2 w_{i-2}w_{i+2}.
        """
        M = self.matrix()
        quads = []
        for i in range(5):
            keep = [k for k in range(5) if k != i]
            sub = [[M[r][c] for c in keep] for r in keep]
            p = pfaffian4(sub)
            if i % 2:
                p = -p
            quads.append(p)
        return quads

    def apply(self, g_V, g_W):
        """Transform by (g_V, g_W) acting on basis vectors in both factors.

        In components: entries'[a,b][l] = sum A[a][c] A[b][d] B[l][k]
        entries[c,d][k], where (A, B) act on the pair index and on the
        coefficient index respectively.  For a primal model A = g_V and
        B = g_W; models tagged with the other spaces pick up the
        inverse-transpose on their dual factors so that one group element
        moves every arrangement coherently.  Both matrices must be
        invertible.
        """
        gv = [[mpq(x) for x in row] for row in g_V]
        gw = [[mpq(x) for x in row] for row in g_W]
        gv_dual = transpose(mat_inverse(gv))   # raises on singular input
        gw_dual = transpose(mat_inverse(gw))
        A, B = {
            "primal": (gv, gw),
            "dual": (gv_dual, gw_dual),
            "w_primal": (gw, gv_dual),
            "w_dual": (gw_dual, gv),
        }[self.space]
        subbed = [tuple(sum((B[r][k] * e[k] for k in range(5)), mpq(0)) for r in range(5))
                  for e in self.entries]

        def sub_entry(i, j):
            if i == j:
                return (mpq(0),) * 5
            if i < j:
                return subbed[PAIR_INDEX[(i, j)]]
            return tuple(-c for c in subbed[PAIR_INDEX[(j, i)]])

        out = []
        for (i, j) in PAIRS:
            acc = [mpq(0)] * 5
            for a in range(5):
                gia = A[i][a]
                if gia == 0:
                    continue
                for b in range(5):
                    gjb = A[j][b]
                    if gjb == 0:
                        continue
                    ent = sub_entry(a, b)
                    f = gia * gjb
                    for k in range(5):
                        if ent[k]:
                            acc[k] += f * ent[k]
            out.append(acc)
        return GenusOneModel(out, self.space)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        d = {"entries": [[q_to_str(c) for c in e] for e in self.entries]}
        if self.space != "primal":
            d["space"] = self.space
        return d

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=1)

    @staticmethod
    def from_json_dict(d):
        return GenusOneModel([[q_from_str(c) for c in e] for e in d["entries"]],
                             d.get("space", "primal"))

    def to_text(self):
        return "\n".join(" ".join(q_to_str(c) for c in e) for e in self.entries) + "\n"

    @staticmethod
    def from_text(text):
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if len(lines) != 10:
            raise ValueError("expected 10 entry lines, got %d" % len(lines))
        return GenusOneModel([[q_from_str(tok) for tok in ln.split()] for ln in lines])

    @staticmethod
    def parse(text):
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return GenusOneModel.from_json_dict(json.loads(text))
        return GenusOneModel.from_text(text)

    def __repr__(self):
        return "GenusOneModel(space=%s, %s)" % (self.space, self.to_json_dict()["entries"])


# -- constructors --------------------------------------------------------

def _cyclic_sum_model(i0, j0, space="primal"):
    """Sum over k of (e_{i0+k} wedge e_{j0+k}) w_k, indices mod 5."""
    rows = [[mpq(0)] * 5 for _ in PAIRS]
    for k in range(5):
        i, j = (i0 + k) % 5, (j0 + k) % 5
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        rows[PAIR_INDEX[(i, j)]][k] += sign
    return GenusOneModel(rows, space)


def hesse_basis(space="primal"):
    """The two generators of the invariant family: sums over cyclic
    shifts of (e1 wedge e4) w0 and (e2 wedge e3) w0."""
    return _cyclic_sum_model(1, 4, space), _cyclic_sum_model(2, 3, space)


def hesse_model(a, b):
    b1, b2 = hesse_basis()
    return b1.scale(a) + b2.scale(b)


def dual_hesse_model(a, b):
    b1, b2 = hesse_basis("dual")
    return b1.scale(a) + b2.scale(b)


def random_model(rng=None, lo=-2, hi=2):
    if rng is None:
        rng = random.Random()
    return GenusOneModel([[rng.randint(lo, hi) for _ in range(5)] for _ in PAIRS])


def secant_quintic(model):
    """Determinant of the Jacobian matrix of the Pfaffian quadrics (the
    degree-10 covariant into quintic forms; equation of the secant
    variety for nonsingular models)."""
    quads = model.pfaffian_quadrics()
    jac = [[q.derivative(j) for j in range(5)] for q in quads]
    return det_poly(jac)


def jacobian_matrix(model):
    """J[i][j] = d p_i / d w_j as MPoly linear forms."""
    quads = model.pfaffian_quadrics()
    return [[q.derivative(j) for j in range(5)] for q in quads]
