"""The alternating matrix of quadrics attached to a nonsingular model.

For a nonsingular model the gradient of the secant quintic admits a
five-dimensional space of quadric syzygies and no linear ones.  Those
syzygies assemble, uniquely up to scale, into a 5x5 alternating matrix
of quadrics whose own signed 4x4 Pfaffians reproduce the gradient up to
a universal constant.  This module computes that matrix by exact linear
algebra and verifies its characterizing properties.
"""

import itertools

from gmpy2 import mpq

from .hesseref import kappa_pfaffian
from .linalg import kernel_basis, pfaffian4, solve_linear
from .models import SingularModelError, secant_quintic
from .mpoly import MPoly
from .scalars import NotASquareError, exact_sqrt

# quadric monomial order: v_a v_b with a <= b, lexicographic
QUADRIC_MONOMIALS = tuple(
    tuple((1 if k == a else 0) + (1 if k == b else 0) for k in range(5))
    for a in range(5) for b in range(a, 5))

_MONOS_CACHE = {}


def monomials(degree):
    """All degree-``degree`` exponent vectors in five variables, sorted."""
    if degree not in _MONOS_CACHE:
        _MONOS_CACHE[degree] = tuple(sorted(
            e for e in itertools.product(range(degree + 1), repeat=5)
            if sum(e) == degree))
    return _MONOS_CACHE[degree]


class NormalizationError(ArithmeticError):
    """Raised when the assembled matrix cannot be rescaled to the
    reference normalization; indicates a bug, not bad input."""


def _coeff_vector(poly, degree):
    monos = monomials(degree)
    index = {m: i for i, m in enumerate(monos)}
    vec = [mpq(0)] * len(monos)
    for expv, coeff in poly.terms.items():
        vec[index[expv]] = coeff
    return vec


def gradient_syzygies(model):
    """Basis of the space of 5-tuples of quadrics q with
    sum_i q_i * dF/dw_i = 0, F the secant quintic.

    Each basis vector has 75 slots: slot*15 + monomial position, with
    the quadric monomials in ``QUADRIC_MONOMIALS`` order.
    """
    quintic = secant_quintic(model)
    grads = [quintic.derivative(i) for i in range(5)]
    sextics = monomials(6)
    index = {m: i for i, m in enumerate(sextics)}
    columns = []
    for grad in grads:
        for mono in QUADRIC_MONOMIALS:
            product = MPoly(5, {mono: mpq(1)}) * grad
            col = [mpq(0)] * len(sextics)
            for expv, coeff in product.terms.items():
                col[index[expv]] = coeff
            columns.append(col)
    rows = [[columns[j][i] for j in range(75)] for i in range(len(sextics))]
    return grads, kernel_basis(rows)


def linear_syzygies(model):
    """Basis of 5-tuples of linear forms l with sum_i l_i * dF/dw_i = 0;
    empty for a nonsingular model (minimality of the resolution)."""
    quintic = secant_quintic(model)
    grads = [quintic.derivative(i) for i in range(5)]
    quintics = monomials(5)
    index = {m: i for i, m in enumerate(quintics)}
    columns = []
    for grad in grads:
        for v in range(5):
            product = MPoly.var(5, v) * grad
            col = [mpq(0)] * len(quintics)
            for expv, coeff in product.terms.items():
                col[index[expv]] = coeff
            columns.append(col)
    rows = [[columns[j][i] for j in range(25)] for i in range(len(quintics))]
    return kernel_basis(rows)


def _tuple_to_quadric(flat, slot):
    terms = {}
    for pos, mono in enumerate(QUADRIC_MONOMIALS):
        c = flat[slot * 15 + pos]
        if c:
            terms[mono] = c
    return MPoly(5, terms)


def signed_pfaffians(matrix):
    """The five signed 4x4 Pfaffians of an alternating 5x5 matrix,
    signs chosen so the matrix annihilates the Pfaffian vector."""
    out = []
    for i in range(5):
        keep = [k for k in range(5) if k != i]
        pf = pfaffian4([[matrix[r][c] for c in keep] for r in keep])
        out.append(pf if i % 2 == 0 else -pf)
    return out


def omega_matrix(model):
    """The 5x5 alternating matrix of quadrics with signed Pfaffians
    equal to kappa * grad(secant quintic); sign canonicalized.

    Raises SingularModelError when the syzygy space does not have the
    nonsingular shape (dimension 5, alternating assembly unique).
    """
    grads, kernel = gradient_syzygies(model)
    if len(kernel) != 5:
        raise SingularModelError("singular model")
    # quadrics[slot][c] = slot-th quadric of kernel vector c
    quadrics = [[_tuple_to_quadric(kernel[c], slot) for c in range(5)]
                for slot in range(5)]
    # find the 5x5 constant matrix M making (columns * M) alternating
    rows = []
    for i in range(5):
        for j in range(i, 5):
            for mono in QUADRIC_MONOMIALS:
                row = [mpq(0)] * 25
                for c in range(5):
                    row[c * 5 + j] += quadrics[i][c].terms.get(mono, mpq(0))
                    row[c * 5 + i] += quadrics[j][c].terms.get(mono, mpq(0))
                rows.append(row)
    assembly = kernel_basis(rows)
    if len(assembly) != 1:
        raise SingularModelError("singular model")
    mix = assembly[0]
    matrix = [[
        sum((quadrics[i][c] * mix[c * 5 + j] for c in range(5)
             if mix[c * 5 + j]), MPoly.zero(5))
        for j in range(5)] for i in range(5)]
    # rescale so the signed Pfaffians match kappa * gradient exactly
    pfs = signed_pfaffians(matrix)
    ratio = None
    for pf, grad in zip(pfs, grads):
        for expv, coeff in grad.terms.items():
            ratio = pf.terms.get(expv, mpq(0)) / coeff
            break
        if ratio is not None:
            break
    if ratio is None or ratio == 0:
        raise NormalizationError("normalization failure: zero Pfaffians")
    for pf, grad in zip(pfs, grads):
        if not (pf - grad * ratio).is_zero():
            raise NormalizationError(
                "normalization failure: Pfaffians not proportional to gradient")
    try:
        scale = exact_sqrt(ratio / kappa_pfaffian())
    except NotASquareError as exc:
        raise NormalizationError("normalization failure: %s" % exc)
    inv = 1 / scale
    matrix = [[entry * inv for entry in row] for row in matrix]
    if _first_nonzero_coefficient(matrix) < 0:
        matrix = [[entry * -1 for entry in row] for row in matrix]
    return matrix


def _first_nonzero_coefficient(matrix):
    for i in range(5):
        for j in range(i + 1, 5):
            for mono in QUADRIC_MONOMIALS:
                c = matrix[i][j].terms.get(mono, mpq(0))
                if c:
                    return c
    return mpq(0)


def matrix_coefficients(matrix):
    """Upper-triangle serialization: for each pair (i,j), i<j, the 15
    quadric coefficients in ``QUADRIC_MONOMIALS`` order."""
    return [[matrix[i][j].terms.get(mono, mpq(0)) for mono in QUADRIC_MONOMIALS]
            for i in range(5) for j in range(i + 1, 5)]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def _ideal_piece_matrix(quadrics, degree):
    """Column matrix of the degree-``degree`` piece of the ideal
    generated by the given quadrics (multiples by monomials)."""
    monos = monomials(degree)
    index = {m: i for i, m in enumerate(monos)}
    cols = []
    for mult in monomials(degree - 2):
        mm = MPoly(5, {mult: mpq(1)})
        for q in quadrics:
            product = mm * q
            col = [mpq(0)] * len(monos)
            for expv, coeff in product.terms.items():
                col[index[expv]] = coeff
            cols.append(col)
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(monos))]


def _in_span(matrix_rows, poly, degree):
    return solve_linear(matrix_rows, _coeff_vector(poly, degree)).consistent


def verify_omega(model, matrix, recovery_pairs=None):
    """Check the characterizing properties of an alternating matrix for
    the given model; returns a dict of named boolean checks plus "ok".

    Checks: alternating shape; every entry of (Jacobian of the Pfaffian
    quadrics) * matrix lies in the cubic piece of the ideal; the signed
    4x4 Pfaffians equal kappa * gradient of the secant quintic; those
    Pfaffians lie in the quartic piece of the ideal; the gradient has no
    linear syzygies; and the derivative-ratio consistency of the entry
    pairs (cross-multiplied difference of the implied differentials lies
    in the ideal).
    """
    report = {}
    report["alternating"] = all(
        (matrix[i][j] + matrix[j][i]).is_zero() for i in range(5) for j in range(5))

    quads = model.pfaffian_quadrics()
    jac = [[quads[i].derivative(j) for j in range(5)] for i in range(5)]
    ideal3 = _ideal_piece_matrix(quads, 3)
    product = [[sum((jac[i][j] * matrix[j][k] for j in range(5)), MPoly.zero(5))
                for k in range(5)] for i in range(5)]
    report["jacobian_product_in_ideal"] = all(
        _in_span(ideal3, product[i][k], 3) for i in range(5) for k in range(5))

    quintic = secant_quintic(model)
    grads = [quintic.derivative(i) for i in range(5)]
    kappa = kappa_pfaffian()
    pfs = signed_pfaffians(matrix)
    report["pfaffians_equal_scaled_gradient"] = all(
        (pf - grad * kappa).is_zero() for pf, grad in zip(pfs, grads))

    ideal4 = _ideal_piece_matrix(quads, 4)
    report["pfaffians_in_ideal"] = all(_in_span(ideal4, pf, 4) for pf in pfs)

    report["gradient_syzygies_minimal"] = len(linear_syzygies(model)) == 0

    report["derivative_ratio_consistent"] = _recovery_consistent(
        matrix, quads, jac, recovery_pairs)

    report["ok"] = all(v for k, v in report.items() if k != "ok")
    return report


def _recovery_consistent(matrix, quads, jac, pairs):
    """Cross-multiplied consistency of the differentials implied by the
    matrix entries, modulo the ideal and the exact differentials of the
    quadric generators."""
    if pairs is None:
        pairs = [((0, 1), (2, 3)), ((0, 1), (1, 2)), ((1, 2), (3, 4))]
    cubics = monomials(3)
    ncub = len(cubics)
    generators = []
    # entrywise multiples of the ideal's cubic piece
    for m in range(5):
        for a in range(5):
            for q in quads:
                vec = [mpq(0)] * (5 * ncub)
                cv = _coeff_vector(MPoly.var(5, a) * q, 3)
                vec[m * ncub:(m + 1) * ncub] = cv
                generators.append(vec)
    # quadratic multiples of the exact differentials of the generators
    for mult in monomials(2):
        mm = MPoly(5, {mult: mpq(1)})
        for b in range(5):
            vec = [mpq(0)] * (5 * ncub)
            for m in range(5):
                cv = _coeff_vector(mm * jac[b][m], 3)
                for t in range(ncub):
                    vec[m * ncub + t] += cv[t]
            generators.append(vec)
    rows = [[generators[j][i] for j in range(len(generators))]
            for i in range(5 * ncub)]
    for (i, j), (k, l) in pairs:
        coeffs = [MPoly.zero(5) for _ in range(5)]
        coeffs[i] = coeffs[i] + matrix[k][l] * MPoly.var(5, j)
        coeffs[j] = coeffs[j] - matrix[k][l] * MPoly.var(5, i)
        coeffs[k] = coeffs[k] - matrix[i][j] * MPoly.var(5, l)
        coeffs[l] = coeffs[l] + matrix[i][j] * MPoly.var(5, k)
        vec = []
        for m in range(5):
            vec.extend(_coeff_vector(coeffs[m], 3))
        if not solve_linear(rows, vec).consistent:
            return False
    return True
