"""Exact evaluation of the covariant tower of a quintic genus one model.

Besides its invariants (degrees 20 and 30) and discriminant, a nonsingular
5x5 alternating matrix of linear forms carries a tower of derived forms:

* a degree-11 companion model spanning with it the pencil of models
  invariant under the same translation group (``hessian``),
* quadric families of degrees 6/16/26 valued in S2V (x) W
  (``q_covariants``),
* quadric families of degrees 18/28/38 valued in V (x) S2W*
  (``r_covariants``),
* dual-space models of degrees 19/29 and the degree-49 doubling map
  (``pi_covariants``, ``double_model``),
* companion models of degrees 7/17 valued in V* (x) ^2W
  (``psi_covariants``) and of degrees 13/23 valued in V (x) ^2W*
  (``xi_covariants``),
* the Pfaffian quadrics of the degree-7/17 pencil (``s_covariants``).

Everything is exact rational arithmetic.  Each derived family is pinned
down either by a linear solve whose uniqueness is asserted at runtime or
by a stored contraction scheme; the normalizing constants live in a
calibration table that is built lazily, once per process, and re-verified
on the two-parameter reference family before first use.  Drift raises
CalibrationError instead of returning silently wrong data.

The heavy per-model state (syzygy matrix, quadric families, determinant
expansions) is cached by :class:`CovariantPipeline`; the module-level
functions are thin wrappers that build a fresh pipeline per call.
"""

import itertools
import threading

from gmpy2 import mpq

from .linalg import mat_inverse, solve_linear
from .models import (GenusOneModel, PAIRS, SingularModelError, hesse_model,
                     secant_quintic)
from .mpoly import MPoly
from .omega import omega_matrix
from .qtuples import QuadricTuple, pfaffian_tuple
from . import hesseref
from .hesseref import CalibrationError

__all__ = [
    "Tensor", "TensorSignature", "ContractionScheme", "CovariantPipeline",
    "contract", "contract_network", "calibration",
    "invariants", "hessian", "polar_expand", "q_covariants", "det_map",
    "r_covariants", "pi_covariants", "double_model", "psi_covariants",
    "xi_covariants", "s_covariants",
]


# --------------------------------------------------------------------------
# permutation signs and the 5-index sign tensor
# --------------------------------------------------------------------------

def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


EPS5 = {tuple(p): mpq(_perm_sign(p))
        for p in itertools.permutations(range(5))}


# --------------------------------------------------------------------------
# sparse tensor-network contraction
# --------------------------------------------------------------------------

def contract_network(tensors, edges, out_legs, order=None):
    """Contract a network of sparse tensors by bucketed hash joins.

    ``tensors`` is a list of sparse dicts mapping index tuples to values;
    every leg of every tensor must either appear in exactly one ``edges``
    pair ``((t1, l1), (t2, l2))`` or be routed to the output by listing it
    in ``out_legs`` (whose order fixes the output index order).  ``order``
    gives the absorption order of the tensors; each tensor after the first
    should share at least one edge with the already-absorbed part, or the
    intermediate state explodes combinatorially.

    Returns the sparse dict of the contracted tensor (keyed by the
    ``out_legs`` values; ``{(): value}`` for a full contraction), with
    exact zeros dropped.
    """
    n = len(tensors)
    if order is None:
        order = list(range(n))
    partner = {}
    for a, b in edges:
        if a in partner or b in partner:
            raise ValueError("leg used twice: %s-%s" % (a, b))
        partner[a] = b
        partner[b] = a
    out_of = {}
    for i, tl in enumerate(out_legs):
        if tl in partner or tl in out_of:
            raise ValueError("output leg used twice: %s" % (tl,))
        out_of[tl] = i
    pos_in_order = {t: i for i, t in enumerate(order)}

    # Partial-contraction states are keyed by sorted (tag, value) tuples:
    # ('e', (t, l)) is a half-open edge waiting for tensor t's leg l, and
    # ('o', slot) is a settled output index.
    state = {(): mpq(1)}
    for t in order:
        tensor = tensors[t]
        if not tensor:
            return {}
        nlegs = len(next(iter(tensor)))
        waiting = []    # legs whose partner is already absorbed
        opening = []    # legs whose partner comes later
        outs = []       # legs routed to the output
        selfpairs = {}  # edges with both ends on this tensor
        for l in range(nlegs):
            tl = (t, l)
            if tl in out_of:
                outs.append((l, out_of[tl]))
                continue
            p = partner.get(tl)
            if p is None:
                raise ValueError("unassigned leg %s" % (tl,))
            if p[0] == t:
                selfpairs[l] = p[1]
            elif pos_in_order[p[0]] < pos_in_order[t]:
                waiting.append((l, tl))
            else:
                opening.append((l, p))
        tbuckets = {}
        for idx, val in tensor.items():
            if any(l < pl and idx[l] != idx[pl] for l, pl in selfpairs.items()):
                continue
            wkey = tuple(idx[l] for l, _ in waiting)
            tbuckets.setdefault(wkey, []).append((idx, val))
        wtags = [("e", tl) for _, tl in waiting]
        newstate = {}
        for key, val in state.items():
            kd = dict(key)
            wkey = tuple(kd[tag] for tag in wtags)
            bucket = tbuckets.get(wkey)
            if not bucket:
                continue
            for tag in wtags:
                del kd[tag]
            base = sorted(kd.items())
            for idx, tval in bucket:
                nd = list(base)
                for l, p in opening:
                    nd.append((("e", p), idx[l]))
                for l, slot in outs:
                    nd.append((("o", slot), idx[l]))
                nk = tuple(sorted(nd))
                prod = val * tval
                if nk in newstate:
                    newstate[nk] = newstate[nk] + prod
                else:
                    newstate[nk] = prod
        state = {}
        for k, v in newstate.items():
            if hasattr(v, "is_zero"):
                if v.is_zero():
                    continue
            elif v == 0:
                continue
            state[k] = v
        if not state:
            return {}
    out = {}
    for key, val in state.items():
        kd = dict(key)
        out[tuple(kd[("o", i)] for i in range(len(out_legs)))] = val
    return out


def _greedy_order(node_count, edges, start):
    """Absorption order keeping every new node adjacent to the done set."""
    adjacency = {i: set() for i in range(node_count)}
    for (n1, _), (n2, _) in edges:
        adjacency[n1].add(n2)
        adjacency[n2].add(n1)
    order = [start]
    done = {start}
    while len(order) < node_count:
        best = max((i for i in range(node_count) if i not in done),
                   key=lambda i: len(adjacency[i] & done))
        order.append(best)
        done.add(best)
    return order


# --------------------------------------------------------------------------
# tensor signatures, canonically-stored tensors, contraction schemes
# --------------------------------------------------------------------------

# label -> (number of 5-dim legs, kind, v-homogeneity, w-homogeneity)
_FACTORS = {
    "V": (1, "plain", 1, 0),
    "V*": (1, "plain", -1, 0),
    "^2V": (2, "alt", 2, 0),
    "^2V*": (2, "alt", -2, 0),
    "S2V": (2, "sym", 2, 0),
    "S5V": (5, "sym", 5, 0),
    "W": (1, "plain", 0, 1),
    "W*": (1, "plain", 0, -1),
    "^2W": (2, "alt", 0, 2),
    "^2W*": (2, "alt", 0, -2),
    "S2W": (2, "sym", 0, 2),
    "S2W*": (2, "sym", 0, -2),
    "S4W": (4, "sym", 0, 4),
    "S5W": (5, "sym", 0, 5),
}


class TensorSignature:
    """An ordered list of tensor factors over the two 5-dim base spaces.

    Knows its bidegree (r, s) = (v-homogeneity, w-homogeneity) and the
    determinant weights (p, q) = ((2d - r)/5, (d - s)/5) that a value of
    polynomial degree d in the model entries must carry; a genuine
    covariant exists only when those are integers.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        if isinstance(factors, str):
            factors = tuple(factors.split(".")) if factors else ()
        factors = tuple(factors)
        for f in factors:
            if f not in _FACTORS:
                raise ValueError("unknown tensor factor %r" % (f,))
        self.factors = factors

    @property
    def homogeneity(self):
        r = sum(_FACTORS[f][2] for f in self.factors)
        s = sum(_FACTORS[f][3] for f in self.factors)
        return (r, s)

    def weights(self, degree):
        """((2d-r)/5, (d-s)/5) and whether both are integers."""
        r, s = self.homogeneity
        p = mpq(2 * degree - r, 5)
        q = mpq(degree - s, 5)
        return p, q, (p.denominator == 1 and q.denominator == 1)

    @property
    def legs(self):
        return sum(_FACTORS[f][0] for f in self.factors)

    def __eq__(self, other):
        return isinstance(other, TensorSignature) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "TensorSignature(%r)" % (".".join(self.factors),)


def _canonical_key(signature, legs):
    """Group a flat leg-index tuple by factor, canonically ordered.

    Alternating factors store strictly increasing index tuples (the sign
    goes to the caller); symmetric factors store sorted tuples.  Returns
    (key, sign) or (None, 0) when an alternating factor repeats an index.
    """
    key = []
    sign = 1
    pos = 0
    for f in signature.factors:
        n, kind, _, _ = _FACTORS[f]
        part = legs[pos:pos + n]
        pos += n
        if kind == "plain":
            key.append(part[0])
            continue
        if kind == "alt":
            if len(set(part)) != len(part):
                return None, 0
            ordered = tuple(sorted(part))
            sign *= _perm_sign(tuple(sorted(range(n), key=lambda i: part[i])))
            key.append(ordered)
        else:
            key.append(tuple(sorted(part)))
    return tuple(key), sign


class Tensor:
    """A sparse tensor with per-factor canonical index storage.

    ``coeffs`` maps canonical keys (one entry per factor: an int for a
    single leg, an ordered tuple for multi-leg factors) to rational
    values.  For symmetric factors the stored value is the *monomial*
    coefficient, i.e. the sum of the underlying tensor components over
    all orderings; ``leg_dict`` redistributes it evenly when the tensor
    enters a contraction.
    """

    __slots__ = ("signature", "coeffs")

    def __init__(self, signature, coeffs):
        if not isinstance(signature, TensorSignature):
            signature = TensorSignature(signature)
        self.signature = signature
        self.coeffs = {k: mpq(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def from_legs(cls, signature, leg_coeffs):
        if not isinstance(signature, TensorSignature):
            signature = TensorSignature(signature)
        out = {}
        for legs, value in leg_coeffs.items():
            key, sign = _canonical_key(signature, legs)
            if key is None:
                continue
            out[key] = out.get(key, mpq(0)) + sign * value
        return cls(signature, out)

    def leg_dict(self):
        """Expand to flat leg indexing, symmetrizing and alternating."""
        out = {}
        for key, value in self.coeffs.items():
            stack = [((), mpq(1))]
            for f, part in zip(self.signature.factors, key):
                n, kind, _, _ = _FACTORS[f]
                if kind == "plain":
                    variants = [((part,), mpq(1))]
                elif kind == "alt":
                    variants = [
                        (perm, mpq(_perm_sign(tuple(
                            sorted(range(n), key=lambda i: perm[i])))))
                        for perm in itertools.permutations(part)]
                else:
                    perms = sorted(set(itertools.permutations(part)))
                    share = mpq(1, len(perms))
                    variants = [(perm, share) for perm in perms]
                stack = [(legs + tuple(v), c * s)
                         for legs, c in stack for v, s in variants]
            for legs, factor in stack:
                total = out.get(legs, mpq(0)) + factor * value
                if total:
                    out[legs] = total
                elif legs in out:
                    del out[legs]
        return out

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.signature == other.signature
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "Tensor(%r, %d terms)" % (self.signature, len(self.coeffs))


class ContractionScheme:
    """A frozen wiring diagram for :func:`contract`.

    ``nodes`` lists the network's tensors: an integer names a positional
    argument of :func:`contract` (arguments may repeat), the string
    ``"eps"`` inserts the alternating 5-index sign tensor.  ``edges``
    pairs (node, leg) endpoints, ``out_legs`` routes the remaining legs to
    the output, and ``order`` fixes the absorption order.
    """

    __slots__ = ("name", "nodes", "edges", "out_legs", "order")

    def __init__(self, name, nodes, edges, out_legs, order=None):
        self.name = name
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self.out_legs = tuple(out_legs)
        self.order = tuple(order) if order is not None else None

    def __repr__(self):
        return "ContractionScheme(%r)" % (self.name,)


def contract(scheme, *tensors):
    """Run a contraction scheme on sparse tensors.

    Each argument may be a :class:`Tensor` (expanded to leg indexing) or a
    plain sparse dict already keyed by flat leg tuples.  Returns the raw
    sparse dict of the result, keyed by the scheme's output legs.
    """
    mats = []
    for node in scheme.nodes:
        if node == "eps":
            mats.append(EPS5)
            continue
        arg = tensors[node]
        mats.append(arg.leg_dict() if isinstance(arg, Tensor) else arg)
    return contract_network(mats, scheme.edges, scheme.out_legs,
                            order=scheme.order)


# --------------------------------------------------------------------------
# monomial bookkeeping and array/object conversions
# --------------------------------------------------------------------------

def _monomials(degree):
    out = []
    for combo in itertools.combinations_with_replacement(range(5), degree):
        e = [0] * 5
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


_QUINTICS = _monomials(5)
_QUINTIC_POS = {m: i for i, m in enumerate(_QUINTICS)}
_QUADRICS = _monomials(2)
_QUADRIC_POS = {m: i for i, m in enumerate(_QUADRICS)}
_SYM_PAIRS = [(a, b) for a in range(5) for b in range(a, 5)]
_VARS = [MPoly.var(5, i) for i in range(5)]


def _quintic_vector(poly):
    v = [mpq(0)] * 126
    for e, c in poly.terms.items():
        v[_QUINTIC_POS[e]] = c
    return v


def _quadric_vector(poly):
    v = [mpq(0)] * 15
    for e, c in poly.terms.items():
        v[_QUADRIC_POS[e]] = c
    return v


def model_array(model):
    """Model -> sparse dict[(row, col, coeff-index)] with both signs."""
    arr = {}
    for (i, j) in PAIRS:
        entry = model.entry(i, j)
        for k in range(5):
            if entry[k]:
                arr[(i, j, k)] = mpq(entry[k])
                arr[(j, i, k)] = -mpq(entry[k])
    return arr


def _array_model(arr, space):
    entries = [[arr.get((i, j, k), mpq(0)) for k in range(5)]
               for (i, j) in PAIRS]
    return GenusOneModel(entries, space)


def quadrics_array(polys):
    """Five quadrics -> dict[(i1, i2, k)] of symmetric tensor components
    (off-diagonal monomial coefficients split over both orderings)."""
    arr = {}
    for k in range(5):
        for e, c in polys[k].terms.items():
            idxs = [i for i in range(5) for _ in range(e[i])]
            i1, i2 = idxs
            if i1 == i2:
                arr[(i1, i1, k)] = arr.get((i1, i1, k), mpq(0)) + c
            else:
                arr[(i1, i2, k)] = arr.get((i1, i2, k), mpq(0)) + c / 2
                arr[(i2, i1, k)] = arr.get((i2, i1, k), mpq(0)) + c / 2
    return {k: v for k, v in arr.items() if v}


def indexed_quadrics_array(polys):
    """Five quadrics -> dict[(a, i1, i2)]: the tuple index first, then the
    symmetric pair (off-diagonal coefficients split over both orders)."""
    arr = {}
    for a in range(5):
        for e, c in polys[a].terms.items():
            idxs = [i for i in range(5) for _ in range(e[i])]
            i1, i2 = idxs
            if i1 == i2:
                arr[(a, i1, i1)] = arr.get((a, i1, i1), mpq(0)) + c
            else:
                arr[(a, i1, i2)] = arr.get((a, i1, i2), mpq(0)) + c / 2
                arr[(a, i2, i1)] = arr.get((a, i2, i1), mpq(0)) + c / 2
    return {k: v for k, v in arr.items() if v}


def array_quadrics(arr, index_slot):
    """Sparse 3-index array -> 5 quadrics grouped by the ``index_slot``-th
    index, summing components over both orderings of the other two."""
    out = []
    for k in range(5):
        terms = {}
        for key, c in arr.items():
            if key[index_slot] != k:
                continue
            rest = tuple(x for i, x in enumerate(key) if i != index_slot)
            e = [0] * 5
            e[rest[0]] += 1
            e[rest[1]] += 1
            e = tuple(e)
            terms[e] = terms.get(e, mpq(0)) + c
        out.append(MPoly(5, {e: c for e, c in terms.items() if c}))
    return out


def _psi_array(model):
    """w_primal-style model -> dict[(coeff-index, row, col)], both signs."""
    arr = {}
    for (i, j) in PAIRS:
        entry = model.entry(i, j)
        for a in range(5):
            if entry[a]:
                arr[(a, i, j)] = mpq(entry[a])
                arr[(a, j, i)] = -mpq(entry[a])
    return arr


def omega_tensor(matrix):
    """Alternating matrix of quadrics -> dict[(i, j, k, l)], antisymmetric
    in (i, j), symmetric components in (k, l)."""
    T = {}
    for i in range(5):
        for j in range(5):
            if i == j:
                continue
            source = matrix[i][j] if i < j else matrix[j][i]
            for e, c in source.terms.items():
                if i > j:
                    c = -c
                idxs = [t for t in range(5) for _ in range(e[t])]
                k, l = idxs
                if k == l:
                    T[(i, j, k, k)] = T.get((i, j, k, k), mpq(0)) + c
                else:
                    T[(i, j, k, l)] = T.get((i, j, k, l), mpq(0)) + c / 2
                    T[(i, j, l, k)] = T.get((i, j, l, k), mpq(0)) + c / 2
    return {k: v for k, v in T.items() if v}


# --------------------------------------------------------------------------
# stored contraction schemes
# --------------------------------------------------------------------------

def _build_q6_scheme():
    # Six copies of the model tensor (legs 0,1 = row/col, leg 2 = coeff),
    # three sign tensors: one eating five row-legs, one five col-legs, one
    # five coeff-legs; one copy donates the two output row/col legs and
    # another the output coeff leg.
    profiles = [("out", ("A", "B")), ("edge", ("A", "out")),
                ("edge", ("B", "out")), ("edge", ("A", "A")),
                ("edge", ("A", "B")), ("edge", ("B", "B"))]
    node_of = {"A": 6, "B": 7, "W": 8}
    edges = []
    outv = []
    slot = {"A": 0, "B": 0, "W": 0}
    outw = None
    for i, (wrole, vroles) in enumerate(profiles):
        for li, role in enumerate(vroles):
            if role == "out":
                outv.append((i, li))
            else:
                edges.append(((i, li), (node_of[role], slot[role])))
                slot[role] += 1
        if wrole == "out":
            outw = (i, 2)
        else:
            edges.append(((i, 2), (node_of["W"], slot["W"])))
            slot["W"] += 1
    outs = [outv[0], outv[1], outw]
    return ContractionScheme(
        "quadrics6: six model copies against three sign tensors",
        (0,) * 6 + ("eps",) * 3, edges, outs,
        order=_greedy_order(9, edges, 6))


_Q6_SCHEME = _build_q6_scheme()
_Q6_SCALE = mpq(1, 128)


def _build_hessian_scheme():
    # Nodes 0-2: model copies; node 3: Pfaffian-quadric array (leg 0 the
    # index, legs 1,2 the symmetric pair); node 4: degree-6 quadric array
    # (legs 0,1 the symmetric pair, leg 2 the index); nodes 5,6: sign
    # tensors over the coeff legs and the row/col legs.
    edges = [((0, 0), (3, 0))]
    for s, leg in enumerate([(0, 1), (1, 0), (2, 0), (2, 1), (4, 1)]):
        edges.append((leg, (6, s)))
    for s, leg in enumerate([(0, 2), (1, 2), (2, 2), (3, 2), (4, 2)]):
        edges.append((leg, (5, s)))
    outs = [(1, 1), (4, 0), (3, 1)]
    return ContractionScheme(
        "hessian11: three model copies, Pfaffian quadrics, degree-6 quadrics",
        (0, 0, 0, 1, 2, "eps", "eps"), edges, outs,
        order=_greedy_order(7, edges, 6))


_HESSIAN_SCHEME = _build_hessian_scheme()


def _build_c4_scheme():
    # Four copies of the syzygy-matrix tensor (legs 0,1 alternating pair,
    # legs 2,3 symmetric pair); copy t sends its alternating legs to the
    # symmetric slots of the two copies other than t and fixpair[t].
    fixpair = (1, 0, 3, 2)
    edges = []
    for t in range(4):
        targets = sorted(s for s in range(4) if s != t and s != fixpair[t])
        for pos, s in enumerate(targets):
            sources = sorted(u for u in range(4) if u != s and u != fixpair[s])
            edges.append(((t, pos), (s, 2 + sources.index(t))))
    return ContractionScheme(
        "invariant20: four syzygy-matrix copies, paired (0 1)(2 3)",
        (0, 0, 0, 0), edges, ())


_C4_SCHEME = _build_c4_scheme()
_C4_SCALE = mpq(665, 2)


def _build_c6_scheme():
    # Six copies; copy t sends its alternating legs to the copies named by
    # the fixed out-degree-2 digraph below, landing in symmetric slots.
    outs = ((1, 2), (0, 2), (3, 4), (0, 5), (1, 5), (3, 4))
    senders = {s: [] for s in range(6)}
    for t in range(6):
        for pos, s in enumerate(outs[t]):
            senders[s].append((t, pos))
    edges = []
    for s in range(6):
        for slot, (t, pos) in enumerate(sorted(senders[s])):
            edges.append(((t, pos), (s, 2 + slot)))
    return ContractionScheme(
        "invariant30: six syzygy-matrix copies on a fixed 2-regular digraph",
        (0, 0, 0, 0, 0, 0), edges, ())


_C6_SCHEME = _build_c6_scheme()
_C6_SCALE = mpq(475)


def q6_by_scheme(model):
    """Degree-6 quadric family by the stored six-copy contraction.

    Returns the symmetric component array; cross-checks the linear-solve
    route used by the pipeline.
    """
    raw = contract(_Q6_SCHEME, model_array(model))
    arr = {}
    for (a, b, k), v in raw.items():
        arr[(a, b, k)] = arr.get((a, b, k), mpq(0)) + v * _Q6_SCALE
        arr[(b, a, k)] = arr.get((b, a, k), mpq(0)) + v * _Q6_SCALE
    return {k: v for k, v in arr.items() if v}


def _hessian_by_scheme(uarr, p2_arr, q6_arr, space):
    raw = contract(_HESSIAN_SCHEME, uarr, p2_arr, q6_arr)
    arr = {}
    for (a, b, k), v in raw.items():
        arr[(a, b, k)] = arr.get((a, b, k), mpq(0)) + v / 2
        arr[(b, a, k)] = arr.get((b, a, k), mpq(0)) - v / 2
    return _array_model(arr, space)


# --------------------------------------------------------------------------
# natural pairing maps into the dual spaces
# --------------------------------------------------------------------------

def volume_pair_model(uarr, rarr):
    """Pair a model array against a V (x) S2W* array into a dual-space
    model array: the three V-indices meet the 5-form, the W index eats one
    symmetric W* slot and the other W* slot survives."""
    out = {}
    for (a, b, k), uv in uarr.items():
        for c in range(5):
            for l in range(5):
                rv = rarr.get((c, k, l))
                if not rv:
                    continue
                rest = [x for x in range(5) if x not in (a, b, c)]
                for (m, n) in itertools.permutations(rest, 2):
                    s = EPS5.get((a, b, c, m, n))
                    if s:
                        out[(m, n, l)] = out.get((m, n, l), mpq(0)) + uv * rv * s
    return {k: v for k, v in out.items() if v}


def volume_pair_dual_w(psi_arr, q_arr):
    """Pair a V* (x) ^2W array against an S2V (x) W array into a
    V (x) ^2W* array: the V* index eats one symmetric V slot, the two W
    indices and the remaining W index meet the 5-form."""
    out = {}
    for (a, i, j), pv in psi_arr.items():
        for c in range(5):
            for k in range(5):
                qv = q_arr.get((a, c, k))
                if not qv:
                    continue
                rest = [x for x in range(5) if x not in (i, j, k)]
                for (m, n) in itertools.permutations(rest, 2):
                    s = EPS5.get((i, j, k, m, n))
                    if s:
                        out[(c, m, n)] = out.get((c, m, n), mpq(0)) + pv * qv * s
    return {k: v for k, v in out.items() if v}


def _model_from_w_pairs(arr, space):
    entries = [[arr.get((c, m, n), mpq(0)) for c in range(5)]
               for (m, n) in PAIRS]
    return GenusOneModel(entries, space)


# --------------------------------------------------------------------------
# determinant map and polarized expansion
# --------------------------------------------------------------------------

_PENCIL_POINTS = [(mpq(1), mpq(0)), (mpq(0), mpq(1)), (mpq(1), mpq(1)),
                  (mpq(1), mpq(-1)), (mpq(2), mpq(1)), (mpq(1), mpq(2))]


def _poly_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = MPoly.zero(5)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _array_as_matrix(arr):
    """3-index array -> 5x5 matrix of linear forms: rows by the second
    index, columns by the third, entries contracting the first with the
    variables."""
    M = []
    for b in range(5):
        row = []
        for k in range(5):
            t = MPoly.zero(5)
            for a in range(5):
                c = arr.get((a, b, k))
                if c:
                    t = t + _VARS[a] * c
            row.append(t)
        M.append(row)
    return M


def _coerce_vw_array(value):
    if isinstance(value, GenusOneModel):
        return model_array(value)
    if isinstance(value, QuadricTuple):
        if value.space != "S2V.W":
            raise ValueError("signature mismatch: expected quadrics in v "
                             "indexed by w, got %r" % (value.space,))
        return quadrics_array(value.polys)
    if isinstance(value, dict):
        return value
    raise ValueError("signature mismatch: cannot interpret %r" % (type(value),))


def det_map(first, second):
    """Determinant pencil of two 3-index tensors sharing the shape
    (V-index, V-index, W-index).

    Forms the 5x5 matrix of linear forms of ``lam*first + mu*second`` and
    returns the six coefficient quintics of its determinant, ordered by
    descending power of lam.
    """
    T1 = _coerce_vw_array(first)
    T2 = _coerce_vw_array(second)
    dets = []
    for (lam, mu) in _PENCIL_POINTS:
        T = {}
        for key in set(T1) | set(T2):
            v = lam * T1.get(key, mpq(0)) + mu * T2.get(key, mpq(0))
            if v:
                T[key] = v
        dets.append(_poly_det(_array_as_matrix(T)))
    inverse = mat_inverse([[lam ** (5 - i) * mu ** i for i in range(6)]
                           for (lam, mu) in _PENCIL_POINTS])
    keys = sorted(set().union(*[d.terms.keys() for d in dets]))
    coeffs = [dict() for _ in range(6)]
    for key in keys:
        column = [d.terms.get(key, mpq(0)) for d in dets]
        for i in range(6):
            v = sum((inverse[i][j] * column[j] for j in range(6)), mpq(0))
            if v:
                coeffs[i][key] = v
    return [MPoly(5, c) for c in coeffs]


def _scale_value(value, weight):
    if isinstance(value, (GenusOneModel, QuadricTuple)):
        return value.scale(weight)
    if isinstance(value, MPoly):
        return value * weight
    if isinstance(value, (list, tuple)):
        return [_scale_value(v, weight) for v in value]
    return mpq(value) * weight


def _pairwise_add(a, b):
    if isinstance(a, (list, tuple)):
        return [_pairwise_add(x, y) for x, y in zip(a, b)]
    return a + b


def _linear_combine(values, weights):
    """Exact linear combination of same-shaped values (models, quadric
    tuples, polynomials, rationals, or uniform lists thereof)."""
    acc = _scale_value(values[0], weights[0])
    for value, weight in zip(values[1:], weights[1:]):
        if weight == 0:
            continue
        acc = _pairwise_add(acc, _scale_value(value, weight))
    return acc


def polar_expand(evaluate, base, other, degree):
    """Coefficients of ``evaluate(base + t*other)`` as a polynomial in t.

    ``evaluate`` must be polynomial of total degree at most ``degree`` in
    its argument; the two arguments must support ``+`` and ``scale``.
    Returns the list of degree+1 coefficient values, constant term first:
    for a homogeneous degree-d map these are the coefficients of
    lam^(d-i) mu^i on the pencil lam*base + mu*other.
    """
    samples = [evaluate(base + other.scale(t)) for t in range(degree + 1)]
    inverse = mat_inverse([[mpq(t) ** j for j in range(degree + 1)]
                           for t in range(degree + 1)])
    return [_linear_combine(samples, inverse[i]) for i in range(degree + 1)]


# --------------------------------------------------------------------------
# linear solves pinning the derived families
# --------------------------------------------------------------------------

def _solve_symmetric_pairing(xs, ys, rhs_poly, error):
    """Unique symmetric array q with
    sum_{a<=b, k} q_abk (xs_a ys_b + [a!=b] xs_b ys_a) w_k == rhs_poly."""
    columns = []
    for (a, b) in _SYM_PAIRS:
        base = xs[a] * ys[b] if a == b else xs[a] * ys[b] + xs[b] * ys[a]
        for k in range(5):
            columns.append(_quintic_vector(base * _VARS[k]))
    A = [[columns[j][r] for j in range(75)] for r in range(126)]
    res = solve_linear(A, _quintic_vector(rhs_poly))
    if not (res.consistent and res.unique):
        raise SingularModelError(error)
    arr = {}
    pos = 0
    for (a, b) in _SYM_PAIRS:
        for k in range(5):
            c = res.particular[pos]
            pos += 1
            if c:
                arr[(a, b, k)] = c
                if a != b:
                    arr[(b, a, k)] = c
    return arr


def _polarized_value(q_arr, xs, ys):
    """sum q_abk xs_a ys_b w_k over the full symmetric array."""
    total = MPoly.zero(5)
    for (a, b, k), c in q_arr.items():
        total = total + xs[a] * ys[b] * _VARS[k] * c
    return total


def _solve_dual_quadrics(fpolys, gpolys, rhs_poly, error):
    """Unique array r with
    sum_{a, k<=l} r_akl (f_k g_l + [k!=l] f_l g_k) v_a == rhs_poly."""
    columns = []
    for a in range(5):
        for (k, l) in _SYM_PAIRS:
            base = fpolys[k] * gpolys[l] if k == l \
                else fpolys[k] * gpolys[l] + fpolys[l] * gpolys[k]
            columns.append(_quintic_vector(base * _VARS[a]))
    A = [[columns[j][r] for j in range(75)] for r in range(126)]
    res = solve_linear(A, _quintic_vector(rhs_poly))
    if not (res.consistent and res.unique):
        raise SingularModelError(error)
    arr = {}
    pos = 0
    for a in range(5):
        for (k, l) in _SYM_PAIRS:
            c = res.particular[pos]
            pos += 1
            if c:
                arr[(a, k, l)] = c
                if k != l:
                    arr[(a, l, k)] = c
    return arr


def _solve_model_coordinates(matrix, targets, space, error):
    """Express five target quadrics in the ten upper entries of an
    alternating matrix of quadrics; returns the coordinates as a model."""
    columns = [_quadric_vector(matrix[i][j]) for (i, j) in PAIRS]
    A = [[columns[j][r] for j in range(10)] for r in range(15)]
    coords = []
    for a in range(5):
        res = solve_linear(A, _quadric_vector(targets[a]))
        if not (res.consistent and res.unique):
            raise SingularModelError(error)
        coords.append(res.particular)
    entries = [[coords[a][idx] for a in range(5)] for idx in range(10)]
    return GenusOneModel(entries, space)


# --------------------------------------------------------------------------
# calibration
# --------------------------------------------------------------------------

class CalibrationTable:
    """The normalizing constants of the evaluation pipeline.

    ``kappa_*`` constants divide raw contractions or scale solve targets;
    ``gamma_*`` constants divide the natural pairing maps.  The scheme
    identifiers record which stored wiring diagrams are in force.  The
    cheap constants are re-verified on the reference family at (1,1) and
    (1,2) when the table is first built; the pairing constants and the
    directional-derivative constant are pinned by the identity test suite
    at the same two points.
    """

    __slots__ = ()

    kappa_q6_secant = mpq(-5, 2)      # substituted quadrics vs secant quintic
    kappa_c4 = _C4_SCALE              # raw degree-20 contraction vs invariant
    kappa_c6 = _C6_SCALE              # raw degree-30 contraction vs invariant
    kappa_hessian = mpq(1)            # stored scheme vs reference restriction
    kappa_q6_scheme = mpq(1)          # stored scheme vs reference restriction
    kappa_q16_directional = mpq(6)    # pencil derivative of q6 vs q16
    gamma_pi19 = mpq(2)               # volume pairing vs degree-19 model
    gamma_pi29 = mpq(2)               # volume pairing vs degree-29 model
    gamma_xi13 = mpq(2)               # dual-w pairing vs degree-13 model
    gamma_xi23 = mpq(-2)              # dual-w pairing vs degree-23 model
    scheme_ids = {
        "q6": _Q6_SCHEME.name,
        "hessian": _HESSIAN_SCHEME.name,
        "c4": _C4_SCHEME.name,
        "c6": _C6_SCHEME.name,
    }

    @property
    def kappa_pfaffian(self):
        return hesseref.kappa_pfaffian()


_CALIBRATION = None
_CALIBRATION_LOCK = threading.Lock()


def calibration():
    """The verified calibration table (built lazily, once per process)."""
    global _CALIBRATION
    if _CALIBRATION is not None:
        return _CALIBRATION
    with _CALIBRATION_LOCK:
        if _CALIBRATION is not None:
            return _CALIBRATION
        table = CalibrationTable()
        for (a, b) in ((1, 1), (1, 2)):
            ref = hesse_model(a, b)
            uarr = model_array(ref)
            q6_ref_arr = quadrics_array(hesseref.q6_ref(a, b).polys)
            got = q6_by_scheme(ref)
            if got != q6_ref_arr:
                raise CalibrationError("calibration drift: degree-6 scheme")
            p2_arr = indexed_quadrics_array(ref.pfaffian_quadrics())
            h = _hessian_by_scheme(uarr, p2_arr, q6_ref_arr, "primal")
            if h.coefficients() != hesseref.hessian_ref(a, b).coefficients():
                raise CalibrationError("calibration drift: hessian scheme")
            T = omega_tensor(hesseref.omega_ref(a, b))
            _, c4, c6 = hesseref.discrete_invariants(a, b)
            raw4 = contract(_C4_SCHEME, T).get((), mpq(0))
            if raw4 != table.kappa_c4 * c4:
                raise CalibrationError("calibration drift: degree-20 scheme")
            raw6 = contract(_C6_SCHEME, T).get((), mpq(0))
            if raw6 != table.kappa_c6 * c6:
                raise CalibrationError("calibration drift: degree-30 scheme")
        _CALIBRATION = table
        return table


# --------------------------------------------------------------------------
# the per-model pipeline
# --------------------------------------------------------------------------

class CovariantPipeline:
    """Caches the derived covariant data of a single model.

    Stages build lazily on demand and reuse everything already computed;
    one pipeline instance is cheap to create.  All stages beyond
    ``invariants`` require a nonsingular model and raise
    SingularModelError otherwise.
    """

    def __init__(self, model):
        self.model = model
        self._cache = {}
        self._lock = threading.RLock()

    def _memo(self, key, build):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    # -- invariants --------------------------------------------------

    def invariants(self):
        """(c4, c6, discriminant); works for singular models too."""
        return self._memo("invariants", self._build_invariants)

    def _invariants_via_syzygies(self, model):
        T = omega_tensor(omega_matrix(model))
        c4 = contract(_C4_SCHEME, T).get((), mpq(0)) / _C4_SCALE
        c6 = contract(_C6_SCHEME, T).get((), mpq(0)) / _C6_SCALE
        return c4, c6

    def _build_invariants(self):
        calibration()
        if all(c == 0 for c in self.model.coefficients()):
            return (mpq(0), mpq(0), mpq(0))
        try:
            c4, c6 = self._invariants_via_syzygies(self.model)
        except SingularModelError:
            c4, c6 = self._invariants_by_interpolation()
        return (c4, c6, (c4 ** 3 - c6 ** 2) / 1728)

    def _invariants_by_interpolation(self):
        """Invariants of a singular model: restrict to a line through a
        nonsingular direction and read off the constant terms."""
        base = hesse_model(1, 1)
        direction = GenusOneModel(
            [list(base.entry(i, j)) for (i, j) in PAIRS], self.model.space)
        points, c4s, c6s = [], [], []
        t = 1
        while len(points) < 31:
            try:
                c4, c6 = self._invariants_via_syzygies(
                    self.model + direction.scale(t))
            except SingularModelError:
                t += 1
                continue
            points.append(mpq(t))
            c4s.append(c4)
            c6s.append(c6)
            t += 1
        rows = [[tv ** j for j in range(31)] for tv in points]
        sol4 = solve_linear(rows, c4s)
        sol6 = solve_linear(rows, c6s)
        if not (sol4.unique and sol6.unique):
            raise CalibrationError("calibration drift: interpolation frame")
        return sol4.particular[0], sol6.particular[0]

    def discriminant(self):
        return self.invariants()[2]

    def _require_nonsingular(self):
        if self.discriminant() == 0:
            raise SingularModelError("singular model")

    # -- first floor: syzygy matrix, Pfaffian quadrics, degree 6 ------

    def model_tensor(self):
        return self._memo("uarr", lambda: model_array(self.model))

    def omega(self):
        """The alternating syzygy matrix of quadrics (sign-canonical)."""
        return self._memo("omega", lambda: omega_matrix(self.model))

    def pfaffian_quadrics(self):
        return self._memo("p2", self.model.pfaffian_quadrics)

    def q6_array(self):
        return self._memo("q6_arr", self._build_q6)

    def _build_q6(self):
        self._require_nonsingular()
        p = self.pfaffian_quadrics()
        target = secant_quintic(self.model) * calibration().kappa_q6_secant
        columns = []
        for (a, b) in _SYM_PAIRS:
            base = p[a] * p[b]
            for k in range(5):
                columns.append(_quintic_vector(base * _VARS[k]))
        A = [[columns[j][r] for j in range(75)] for r in range(126)]
        res = solve_linear(A, _quintic_vector(target))
        if not (res.consistent and res.unique):
            raise SingularModelError("singular model")
        arr = {}
        pos = 0
        for (a, b) in _SYM_PAIRS:
            for k in range(5):
                c = res.particular[pos]
                pos += 1
                if c:
                    if a == b:
                        arr[(a, a, k)] = c
                    else:
                        arr[(a, b, k)] = c / 2
                        arr[(b, a, k)] = c / 2
        return arr

    def q6(self):
        return QuadricTuple("S2V.W", array_quadrics(self.q6_array(), 2))

    # -- hessian and the Pfaffian pencil ------------------------------

    def hessian(self):
        return self._memo("hessian", self._build_hessian)

    def _build_hessian(self):
        self._require_nonsingular()
        p2_arr = indexed_quadrics_array(self.pfaffian_quadrics())
        return _hessian_by_scheme(self.model_tensor(), p2_arr,
                                  self.q6_array(), self.model.space)

    def pfaffian_pencil(self):
        """(p, p12, p22): the three quadric coefficient tuples of the
        Pfaffians along lam*model + mu*hessian."""
        return self._memo("pfaffian_pencil", self._build_pfaffian_pencil)

    def _build_pfaffian_pencil(self):
        p = self.pfaffian_quadrics()
        h = self.hessian()
        ph = h.pfaffian_quadrics()
        ps = (self.model + h).pfaffian_quadrics()
        p12 = [(ps[i] - p[i] - ph[i]) * mpq(1, 2) for i in range(5)]
        return p, p12, ph

    # -- degrees 16 and 26 ---------------------------------------------

    def q16_array(self):
        return self._memo("q16_arr", self._build_q16)

    def _build_q16(self):
        self._require_nonsingular()
        p, p12, _ = self.pfaffian_pencil()
        rhs = _polarized_value(self.q6_array(), p12, p12)
        return _solve_symmetric_pairing(p, p12, rhs, "singular model")

    def q16(self):
        return QuadricTuple("S2V.W", array_quadrics(self.q16_array(), 2))

    def q26_array(self):
        return self._memo("q26_arr", self._build_q26)

    def _build_q26(self):
        self._require_nonsingular()
        p, p12, p22 = self.pfaffian_pencil()
        q6_arr = self.q6_array()
        rhs = _polarized_value(q6_arr, p12, p22) \
            + _polarized_value(self.q16_array(), p12, p12) * 4
        raw = _solve_symmetric_pairing(p, p12, rhs, "singular model")
        c4 = self.invariants()[0]
        out = {}
        for key in set(raw) | set(q6_arr):
            v = (raw.get(key, mpq(0)) / 5 + 3 * c4 * q6_arr.get(key, mpq(0))) / 4
            if v:
                out[key] = v
        return out

    def q26(self):
        return QuadricTuple("S2V.W", array_quadrics(self.q26_array(), 2))

    # -- determinant pencils and the degree-18/28 solves ---------------

    def det_forms(self):
        """The six independent coefficient quintics of the three
        determinant pencils, keyed m10/m20/m30/m40/m50/m50x/m80."""
        return self._memo("det_forms", self._build_det_forms)

    def _build_det_forms(self):
        self._require_nonsingular()
        uarr = self.model_tensor()
        harr = model_array(self.hessian())
        d1 = det_map(uarr, self.q6_array())
        d2 = det_map(harr, self.q6_array())
        d3 = det_map(uarr, self.q16_array())
        return {
            "m10": d1[1], "m20": d1[3] * mpq(-1, 2), "m30": d1[5],
            "m50": d2[1], "m40": d2[3] * mpq(1, 2), "m30_alt": d2[5],
            "m20_alt": d3[1], "m50x": d3[3] * mpq(1, 2), "m80": d3[5],
            "even_slots_vanish": all(d[i].is_zero()
                                     for d in (d1, d2, d3) for i in (0, 2, 4)),
        }

    def _dual_quadric_frame(self):
        q6pol = array_quadrics(self.q6_array(), 2)
        q16pol = array_quadrics(self.q16_array(), 2)
        return q6pol, q16pol

    def r18_array(self):
        return self._memo("r18_arr", self._build_r18)

    def _build_r18(self):
        self._require_nonsingular()
        c4, c6, _ = self.invariants()
        m = self.det_forms()
        rhs = (m["m10"] * (5 * c6) + m["m20"] * (14 * c4) + m["m40"]) \
            * mpq(-1, 18)
        q6pol, q16pol = self._dual_quadric_frame()
        return _solve_dual_quadrics(q6pol, q16pol, rhs, "singular model")

    def r28_array(self):
        return self._memo("r28_arr", self._build_r28)

    def _build_r28(self):
        self._require_nonsingular()
        c4, c6, _ = self.invariants()
        m = self.det_forms()
        rhs = (m["m10"] * (9 * c4 * c4) + m["m20"] * (620 * c6)
               - m["m30"] * (270 * c4) + m["m50"] - m["m50x"] * 216) \
            * mpq(-1, 792)
        q6pol, q16pol = self._dual_quadric_frame()
        return _solve_dual_quadrics(q6pol, q16pol, rhs, "singular model")

    def r18(self):
        return QuadricTuple("V.S2Wd", array_quadrics(self.r18_array(), 0))

    def r28(self):
        return QuadricTuple("V.S2Wd", array_quadrics(self.r28_array(), 0))

    def r38(self):
        return self._memo("r38", self._build_r38)

    def _build_r38(self):
        c4 = self.invariants()[0]
        lead = pfaffian_tuple(self.pi19())
        r18pol = array_quadrics(self.r18_array(), 0)
        return QuadricTuple("V.S2Wd", [lead.polys[k] - r18pol[k] * c4
                                       for k in range(5)])

    # -- dual-space models and doubling --------------------------------

    def pi19(self):
        return self._memo("pi19", lambda: _array_model(
            self._scaled_volume_pair(self.r18_array(),
                                     calibration().gamma_pi19), "dual"))

    def pi29(self):
        return self._memo("pi29", lambda: _array_model(
            self._scaled_volume_pair(self.r28_array(),
                                     calibration().gamma_pi29), "dual"))

    def _scaled_volume_pair(self, rarr, gamma):
        raw = volume_pair_model(self.model_tensor(), rarr)
        return {k: v / gamma for k, v in raw.items()}

    def double(self, proper=False):
        """The degree-49 doubling model in the dual space.

        With ``proper=True`` the output is rescaled by a diagonal pair so
        that its invariants equal the input's exactly.
        """
        c4, c6, delta = self.invariants()
        if delta == 0:
            raise SingularModelError("singular model")
        doubled = (self.pi19().scale(c6) - self.pi29().scale(c4)) \
            .scale(mpq(1, 144))
        if not proper:
            return doubled
        unit = [[mpq(1) if i == j else mpq(0) for j in range(5)]
                for i in range(5)]
        squeeze = [row[:] for row in unit]
        squeeze[0][0] = delta ** 2
        return doubled.apply(squeeze, unit)

    # -- degree-7/17 companions and their derived families --------------

    def psi7(self):
        return self._memo("psi7", self._build_psi7)

    def _build_psi7(self):
        self._require_nonsingular()
        _, p12, _ = self.pfaffian_pencil()
        return _solve_model_coordinates(self.omega(), p12, "w_primal",
                                        "singular model")

    def psi17(self):
        return self._memo("psi17", self._build_psi17)

    def _build_psi17(self):
        self._require_nonsingular()
        c4 = self.invariants()[0]
        p, _, p22 = self.pfaffian_pencil()
        targets = [(p22[i] + p[i] * c4) * mpq(1, 2) for i in range(5)]
        return _solve_model_coordinates(self.omega(), targets, "w_primal",
                                        "singular model")

    def xi13(self):
        return self._memo("xi13", lambda: self._xi_from(
            self.q6_array(), calibration().gamma_xi13))

    def xi23(self):
        return self._memo("xi23", lambda: self._xi_from(
            self.q16_array(), calibration().gamma_xi23))

    def _xi_from(self, q_arr, gamma):
        raw = volume_pair_dual_w(_psi_array(self.psi7()), q_arr)
        return _model_from_w_pairs({k: v / gamma for k, v in raw.items()},
                                   "w_dual")

    def s_tuples(self):
        """Pfaffian quadrics along the degree-7/17 pencil: (s14, s24, s34)."""
        return self._memo("s_tuples", self._build_s_tuples)

    def _build_s_tuples(self):
        s14 = pfaffian_tuple(self.psi7())
        s34 = pfaffian_tuple(self.psi17())
        both = pfaffian_tuple(self.psi7() + self.psi17())
        s24 = QuadricTuple(s14.space,
                           [(both.polys[k] - s14.polys[k] - s34.polys[k])
                            * mpq(1, 2) for k in range(5)])
        return s14, s24, s34

    def q16_by_pencil_derivative(self):
        """Cross-check route for the degree-16 family: the first pencil
        derivative of the stored degree-6 contraction along the hessian,
        divided by the directional constant."""
        kappa = calibration().kappa_q16_directional
        samples = [q6_by_scheme(self.model + self.hessian().scale(t))
                   for t in range(7)]
        inverse = mat_inverse([[mpq(t) ** j for j in range(7)]
                               for t in range(7)])
        keys = set()
        for s in samples:
            keys |= set(s)
        out = {}
        for key in keys:
            v = sum((inverse[1][j] * samples[j].get(key, mpq(0))
                     for j in range(7)), mpq(0))
            if v:
                out[key] = v / kappa
        return out


# --------------------------------------------------------------------------
# module-level operations
# --------------------------------------------------------------------------

def invariants(model):
    """(c4, c6, discriminant) of a model; (0, 0, 0) for the zero model,
    exact for singular models too."""
    return CovariantPipeline(model).invariants()


def hessian(model):
    """The degree-11 companion model (same space as the input)."""
    return CovariantPipeline(model).hessian()


def q_covariants(model):
    """The degree-6/16/26 quadric families as S2V.W quadric tuples."""
    pipe = CovariantPipeline(model)
    return pipe.q6(), pipe.q16(), pipe.q26()


def r_covariants(model):
    """The degree-18/28/38 quadric families as V.S2Wd quadric tuples."""
    pipe = CovariantPipeline(model)
    return pipe.r18(), pipe.r28(), pipe.r38()


def pi_covariants(model):
    """The degree-19/29 dual-space models."""
    pipe = CovariantPipeline(model)
    return pipe.pi19(), pipe.pi29()


def double_model(model, proper=False):
    """The degree-49 doubling model (dual space); ``proper`` rescales it
    to carry the input's invariants exactly."""
    return CovariantPipeline(model).double(proper=proper)


def psi_covariants(model):
    """The degree-7/17 companion models (w_primal layout), pinned up to
    one common sign."""
    pipe = CovariantPipeline(model)
    return pipe.psi7(), pipe.psi17()


def xi_covariants(model):
    """The degree-13/23 companion models (w_dual layout), pinned up to
    one common sign."""
    pipe = CovariantPipeline(model)
    return pipe.xi13(), pipe.xi23()


def s_covariants(model):
    """The degree-14/24/34 quadric families (Pfaffians of the degree-7/17
    pencil), sign-safe."""
    return CovariantPipeline(model).s_tuples()
