"""Reference data on the two-parameter family u(a,b).

Every covariant in the evaluation pipeline restricts, on the family
u(a,b), to a short closed-form expression in a and b.  This module
records those restrictions as golden data: the ring of discrete
invariants (D, c4, c6), the scalar form pairs attached to the degree
7/17 and 13/23 covariants, the reference alternating matrix of quadrics,
and the degree 12/20/30 pencil polynomials that parametrize families of
5-congruent curves.  The calibration table tying the pipeline's raw
contractions to these normalizations lives in the covariants module;
``calibrate()`` re-exports it here.
"""

from gmpy2 import mpq, mpz

from .binform import BinaryForm, hessian_det, jacobian_det
from .models import GenusOneModel, dual_hesse_model, hesse_basis, hesse_model
from .mpoly import MPoly
from .qtuples import QuadricTuple
from .scalars import content_of

# ---------------------------------------------------------------------------
# discrete invariants
# ---------------------------------------------------------------------------


def discrete_invariants(a, b):
    """The generators (D, c4, c6) of the ring of discrete invariants,
    evaluated at (a, b); works for rationals and for polynomial values."""
    a5 = a ** 5
    b5 = b ** 5
    D = a * b * (a5 * a5 - 11 * a5 * b5 - b5 * b5)
    c4 = (a5 ** 4 + 228 * a5 ** 3 * b5 + 494 * a5 ** 2 * b5 ** 2
          - 228 * a5 * b5 ** 3 + b5 ** 4)
    c6 = (-a5 ** 6 + 522 * a5 ** 5 * b5 + 10005 * a5 ** 4 * b5 ** 2
          + 10005 * a5 ** 2 * b5 ** 4 - 522 * a5 * b5 ** 5 - b5 ** 6)
    return D, c4, c6


def ab_vars():
    """Polynomial generators (a, b) for symbolic work on the family."""
    return MPoly.var(2, 0), MPoly.var(2, 1)


_FORMS_CACHE = {}


def discrete_invariant_forms():
    """(D, c4, c6) as polynomials in the two family parameters."""
    if "dinv" not in _FORMS_CACHE:
        _FORMS_CACHE["dinv"] = discrete_invariants(*ab_vars())
    return _FORMS_CACHE["dinv"]


def d_partials(a, b):
    """Both partial derivatives of D, evaluated at (a, b)."""
    D, _, _ = discrete_invariant_forms()
    return D.derivative(0).evaluate((a, b)), D.derivative(1).evaluate((a, b))


def c4_partials(a, b):
    _, c4, _ = discrete_invariant_forms()
    return c4.derivative(0).evaluate((a, b)), c4.derivative(1).evaluate((a, b))


def c6_partials(a, b):
    _, _, c6 = discrete_invariant_forms()
    return c6.derivative(0).evaluate((a, b)), c6.derivative(1).evaluate((a, b))


# ---------------------------------------------------------------------------
# scalar form pairs for the degree 7/17 and 13/23 covariants
# ---------------------------------------------------------------------------


def psi_scalars(a, b):
    """(f7, g7, f17, g17) evaluated at (a, b)."""
    a5, b5 = a ** 5, b ** 5
    f7 = b * b * (7 * a5 - b5)
    g7 = a * a * (a5 + 7 * b5)
    f17 = b * b * (17 * a5 ** 3 + 187 * a5 ** 2 * b5 + 119 * a5 * b5 ** 2 + b5 ** 3)
    g17 = -(a * a) * (a5 ** 3 - 119 * a5 ** 2 * b5 + 187 * a5 * b5 ** 2 - 17 * b5 ** 3)
    return f7, g7, f17, g17


def psi_ref_forms():
    """(f7, g7, f17, g17) as polynomials in the family parameters."""
    if "psi" not in _FORMS_CACHE:
        _FORMS_CACHE["psi"] = psi_scalars(*ab_vars())
    return _FORMS_CACHE["psi"]


def xi_scalars(a, b):
    """(f13, g13, f23, g23) evaluated at (a, b)."""
    a5, b5 = a ** 5, b ** 5
    f13 = b ** 3 * (26 * a5 ** 2 + 39 * a5 * b5 - b5 ** 2)
    g13 = a ** 3 * (a5 ** 2 + 39 * a5 * b5 - 26 * b5 ** 2)
    f23 = -(b ** 3) * (46 * a5 ** 4 + 1173 * a5 ** 3 * b5 - 391 * a5 ** 2 * b5 ** 2
                       + 207 * a5 * b5 ** 3 + b5 ** 4)
    g23 = a ** 3 * (a5 ** 4 - 207 * a5 ** 3 * b5 - 391 * a5 ** 2 * b5 ** 2
                    - 1173 * a5 * b5 ** 3 + 46 * b5 ** 4)
    return f13, g13, f23, g23


def xi_ref_forms():
    if "xi" not in _FORMS_CACHE:
        _FORMS_CACHE["xi"] = xi_scalars(*ab_vars())
    return _FORMS_CACHE["xi"]


# ---------------------------------------------------------------------------
# reference restrictions of the model-valued covariants (rational (a, b))
# ---------------------------------------------------------------------------


def hessian_ref(a, b):
    """Degree-11 companion of u(a,b): u(-dD/db, dD/da)."""
    da, db = d_partials(mpq(a), mpq(b))
    return hesse_model(-db, da)


def pi19_ref(a, b):
    """Degree-19 dual-space covariant on the family: the normalized
    gradient of c4 placed on the dual family basis."""
    ca, cb = c4_partials(mpq(a), mpq(b))
    return dual_hesse_model(ca / 20, cb / 20)


def pi29_ref(a, b):
    """Degree-29 analogue built from the gradient of c6."""
    ca, cb = c6_partials(mpq(a), mpq(b))
    return dual_hesse_model(ca / 30, cb / 30)


def double_ref(a, b):
    """Degree-49 doubling covariant on the family:
    D^4 * (b, -a) on the dual family basis."""
    a, b = mpq(a), mpq(b)
    D, _, _ = discrete_invariants(a, b)
    return dual_hesse_model(D ** 4 * b, -(D ** 4) * a)


def _combine_basis(space, x, y):
    b1, b2 = hesse_basis(space)
    return b1.scale(x) + b2.scale(y)


def psi7_ref(a, b):
    f7, g7, _, _ = psi_scalars(mpq(a), mpq(b))
    return _combine_basis("w_primal", f7, g7)


def psi17_ref(a, b):
    _, _, f17, g17 = psi_scalars(mpq(a), mpq(b))
    return _combine_basis("w_primal", f17, g17)


def xi13_ref(a, b):
    f13, g13, _, _ = xi_scalars(mpq(a), mpq(b))
    return _combine_basis("w_dual", f13, g13)


def xi23_ref(a, b):
    _, _, f23, g23 = xi_scalars(mpq(a), mpq(b))
    return _combine_basis("w_dual", f23, g23)


def _cyclic_quadric(k, c_sq, c_14, c_23):
    """c_sq*y_k^2 + c_14*y_{k+1}y_{k+4} + c_23*y_{k+2}y_{k+3} as an MPoly."""
    q = MPoly.var(5, k, 2) * c_sq
    q = q + MPoly.var(5, (k + 1) % 5) * MPoly.var(5, (k + 4) % 5) * c_14
    q = q + MPoly.var(5, (k + 2) % 5) * MPoly.var(5, (k + 3) % 5) * c_23
    return q


def q6_ref(a, b):
    """Degree-6 covariant on the family: five quadrics in v indexed by w."""
    a, b = mpq(a), mpq(b)
    a5, b5 = a ** 5, b ** 5
    polys = [_cyclic_quadric(k, 5 * a ** 3 * b ** 3, a * (a5 - 3 * b5),
                             -b * (3 * a5 + b5))
             for k in range(5)]
    return QuadricTuple("S2V.W", polys)


def p2_ref(a, b):
    """The five Pfaffian quadrics of u(a,b):
    p_i = ab*w_i^2 + b^2*w_{i+1}w_{i+4} - a^2*w_{i+2}w_{i+3}."""
    a, b = mpq(a), mpq(b)
    polys = [_cyclic_quadric(i, a * b, b * b, -(a * a)) for i in range(5)]
    return QuadricTuple("Vd.S2W", polys)


# ---------------------------------------------------------------------------
# reference alternating matrix of quadrics
# ---------------------------------------------------------------------------


def omega_quadrics(a, b):
    """The two families of quadrics (alpha_i, beta_i) filling the
    reference alternating matrix, returned as ([alpha_0..4], [beta_0..4])."""
    a5, b5 = a ** 5, b ** 5
    alphas = [_cyclic_quadric(i, 5 * a ** 4 * b, -10 * a ** 3 * b * b, a5 - 3 * b5)
              for i in range(5)]
    betas = [_cyclic_quadric(i, 5 * a * b ** 4, -(3 * a5 + b5), 10 * a * a * b ** 3)
             for i in range(5)]
    return alphas, betas


# upper-triangle layout of the reference matrix: (entry sign, family, index)
_OMEGA_LAYOUT = {
    (0, 1): (1, 0, 3), (0, 2): (1, 1, 1), (0, 3): (-1, 1, 4), (0, 4): (-1, 0, 2),
    (1, 2): (1, 0, 4), (1, 3): (1, 1, 2), (1, 4): (-1, 1, 0),
    (2, 3): (1, 0, 0), (2, 4): (1, 1, 3),
    (3, 4): (1, 0, 1),
}


def omega_ref(a, b):
    """Reference 5x5 alternating matrix of quadrics for u(a,b)."""
    a, b = mpq(a), mpq(b)
    fams = omega_quadrics(a, b)
    mat = [[MPoly.zero(5) for _ in range(5)] for _ in range(5)]
    for (i, j), (sgn, fam, k) in _OMEGA_LAYOUT.items():
        q = fams[fam][k] if sgn == 1 else -fams[fam][k]
        mat[i][j] = q
        mat[j][i] = -q
    return mat


def quadric_coefficient_block(a, b):
    """3x3 block of cyclic-quadric coefficients for (p_i, alpha_i, beta_i);
    its determinant is 18*D(a,b)."""
    a5, b5 = a ** 5, b ** 5
    return [
        [a * b, b * b, -(a * a)],
        [5 * a ** 4 * b, -10 * a ** 3 * b * b, a5 - 3 * b5],
        [5 * a * b ** 4, -(3 * a5 + b5), 10 * a * a * b ** 3],
    ]


# ---------------------------------------------------------------------------
# pencil polynomials for 5-congruent families
# ---------------------------------------------------------------------------

# coefficient of lam^(12-j) mu^j as a polynomial in (c4, c6)
def _pencil_disc_coeffs(c4, c6):
    return [
        -(125 * c4 ** 3 + 64 * c6 ** 2),
        -1620 * c4 ** 2 * c6,
        -66 * (25 * c4 ** 4 + 56 * c4 * c6 ** 2),
        -220 * (11 * c4 ** 3 * c6 + 16 * c6 ** 3),
        1485 * (5 * c4 ** 5 + 4 * c4 ** 2 * c6 ** 2),
        792 * (53 * c4 ** 4 * c6 + 28 * c4 * c6 ** 3),
        660 * (9 * c4 ** 6 + 164 * c4 ** 3 * c6 ** 2 + 16 * c6 ** 4),
        2376 * (19 * c4 ** 5 * c6 + 44 * c4 ** 2 * c6 ** 3),
        495 * (27 * c4 ** 7 + 104 * c4 ** 4 * c6 ** 2 + 112 * c4 * c6 ** 4),
        220 * (81 * c4 ** 6 * c6 + 136 * c4 ** 3 * c6 ** 3 + 80 * c6 ** 5),
        -594 * (9 * c4 ** 8 - 32 * c4 ** 5 * c6 ** 2 - 16 * c4 ** 2 * c6 ** 4),
        -60 * (135 * c4 ** 7 * c6 - 328 * c4 ** 4 * c6 ** 3 + 112 * c4 * c6 ** 5),
        -(729 * c4 ** 9 + 108 * c4 ** 6 * c6 ** 2 - 2896 * c4 ** 3 * c6 ** 4
          + 1600 * c6 ** 6),
    ]


def pencil_discriminant(c4, c6):
    """The degree-12 pencil form in (lam, mu) whose vanishing marks the
    singular members of the twisted family attached to (c4, c6)."""
    return BinaryForm(_pencil_disc_coeffs(c4, c6))


def hesse_polynomials(c4, c6):
    """The pencil polynomials (degree 12, 20, 30 forms in (lam, mu)).

    The degree-20 and degree-30 forms come from the fixed determinant
    recipes -1/(11^2*12^2) * det of the second-derivative matrix and
    -1/(12*20) * det of the mixed first-derivative matrix.
    """
    P = pencil_discriminant(c4, c6)
    P4 = hessian_det(P).scale(mpq(-1, 11 ** 2 * 12 ** 2))
    P6 = jacobian_det(P, P4).scale(mpq(-1, 12 * 20))
    return P, P4, P6


def pencil_discriminant_from_family():
    """Rebuild the degree-12 pencil form from first principles:
    27 * D(lam*f7 + mu*f17, lam*g7 + mu*g17) / D(a,b)^2, returned as a
    binary form in (lam, mu) whose coefficients are polynomials in
    (a, b).  Cross-checks the hard-coded display after substituting the
    discrete invariant forms for its (c4, c6) coefficients.
    """
    # variables (lam, mu, a, b)
    lam = MPoly.var(4, 0)
    mu = MPoly.var(4, 1)
    a4 = MPoly.var(4, 2)
    b4 = MPoly.var(4, 3)
    f7, g7, f17, g17 = (f.substitute([a4, b4]) for f in psi_ref_forms())
    A = lam * f7 + mu * f17
    B = lam * g7 + mu * g17
    D_AB, _, _ = discrete_invariants(A, B)
    D_ab, _, _ = discrete_invariant_forms()
    D2 = (D_ab * D_ab)
    coeffs = []
    for j in range(13):
        # coefficient of lam^(12-j) mu^j as a polynomial in (a, b)
        cj = {}
        for e, c in D_AB.terms.items():
            if e[0] == 12 - j and e[1] == j:
                cj[(e[2], e[3])] = c
        poly = MPoly(2, cj) * 27
        coeffs.append(poly.div_exact(D2))
    return BinaryForm(coeffs)


def rescaled_pencil(c4, c6, sub=((1663, 2850), (7, 18))):
    """Substitute a fixed integral change of pencil coordinates into the
    degree-12 form, strip the integer content, and rebuild the degree-20
    and degree-30 forms from the primitive result (here with plain
    -1/11^2 and -1/20 normalizations, which keep all three primitive).

    Returns (content, P, P4, P6) with P, P4, P6 forms in the new
    coordinates (xi, eta).
    """
    (s00, s01), (s10, s11) = sub
    P = pencil_discriminant(mpq(c4), mpq(c6)).substitute_linear(s00, s01, s10, s11)
    content = content_of(P.coeffs)
    P = P.scale(1 / content)
    P4 = hessian_det(P).scale(mpq(-1, 11 ** 2))
    P6 = jacobian_det(P, P4).scale(mpq(-1, 20))
    return content, P, P4, P6


# the content stripped off the rescaled pencil at the reference invariants
REFERENCE_PENCIL_CONTENT = mpq(mpz(2) ** 89 * mpz(3) ** 15 * mpz(13) ** 9)


class CalibrationError(ArithmeticError):
    """A constant that ought to be fixed came out different at the two
    calibration points; signals an implementation bug upstream."""


def _ratio_of(poly, reference):
    """The constant c with poly == c * reference; None if no such c."""
    if reference.is_zero():
        return None
    for expv, coeff in reference.terms.items():
        c = poly.terms.get(expv, mpq(0)) / coeff
        break
    if (poly - reference * c).is_zero():
        return c
    return None


def kappa_pfaffian():
    """Constant ratio between the signed 4x4 Pfaffians of the reference
    alternating matrix and the gradient of the secant quintic.

    Evaluated at (1,1) and re-checked at (1,2); cached afterwards.
    """
    if "kappa_pf" in _FORMS_CACHE:
        return _FORMS_CACHE["kappa_pf"]
    from .linalg import pfaffian4
    from .models import secant_quintic

    value = None
    for (a, b) in ((1, 1), (1, 2)):
        omega = omega_ref(a, b)
        grads = [secant_quintic(hesse_model(a, b)).derivative(i) for i in range(5)]
        for i in range(5):
            keep = [k for k in range(5) if k != i]
            pf = pfaffian4([[omega[r][c] for c in keep] for r in keep])
            if i % 2:
                pf = -pf
            ratio = _ratio_of(pf, grads[i])
            if ratio is None:
                raise CalibrationError("calibration drift: Pfaffian %d" % i)
            if value is None:
                value = ratio
            elif ratio != value:
                raise CalibrationError("calibration drift: kappa_pfaffian")
    _FORMS_CACHE["kappa_pf"] = value
    return value


def calibrate():
    """Constants tying the raw contraction/solve pipeline to the
    reference normalizations above; computed once on the family."""
    from . import covariants

    return covariants.calibration()


REFERENCE_RESTRICTIONS = {
    "hessian": hessian_ref,
    "psi7": psi7_ref,
    "psi17": psi17_ref,
    "xi13": xi13_ref,
    "xi23": xi23_ref,
    "pi19": pi19_ref,
    "pi29": pi29_ref,
    "double": double_ref,
    "q6": q6_ref,
    "p2": p2_ref,
    "omega": omega_ref,
}
