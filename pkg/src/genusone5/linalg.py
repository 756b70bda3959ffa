"""Exact linear algebra: fraction-free elimination over Z, plus small
generic helpers (determinants of polynomial matrices, 4x4 Pfaffians,
field-generic reduction for Q(zeta) matrices).

The elimination strategy is cross-multiplication with per-row content
stripping: rows are kept as primitive integer vectors throughout, which
keeps entry growth under control on the 200x75-scale systems produced
by the covariant solves.  Pivoting is deterministic (first nonzero row,
columns left to right) so kernels and solutions are reproducible.
"""

from gmpy2 import mpq, mpz, gcd

from .mpoly import MPoly


class SolveResult:
    __slots__ = ("rank", "pivot_cols", "consistent", "particular", "kernel", "nrows", "ncols")

    def __init__(self, rank, pivot_cols, consistent, particular, kernel, nrows, ncols):
        self.rank = rank
        self.pivot_cols = pivot_cols
        self.consistent = consistent
        self.particular = particular
        self.kernel = kernel
        self.nrows = nrows
        self.ncols = ncols

    @property
    def unique(self):
        return self.consistent and not self.kernel

    def __repr__(self):
        return ("SolveResult(rank=%d, consistent=%s, kernel_dim=%d, shape=%dx%d)"
                % (self.rank, self.consistent, len(self.kernel), self.nrows, self.ncols))


def _primitive_int_row(row):
    """Scale a row of rationals to a primitive integer row (gcd 1)."""
    den = mpz(1)
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [mpz(x.numerator) * (den // x.denominator) for x in row]
    g = mpz(0)
    for x in ints:
        if x:
            g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _strip_row(row):
    g = mpz(0)
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _reduced_echelon(rows):
    """In-place Gauss-Jordan over Z with content stripping.

    Returns (pivot list [(row, col), ...]).  Rows end up primitive, each
    pivot column zero outside its pivot row.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    prow = 0
    for col in range(ncols):
        pr = None
        for r in range(prow, len(rows)):
            if rows[r][col]:
                pr = r
                break
        if pr is None:
            continue
        rows[prow], rows[pr] = rows[pr], rows[prow]
        pivot = rows[prow]
        pv = pivot[col]
        for r in range(len(rows)):
            if r == prow:
                continue
            rv = rows[r][col]
            if not rv:
                continue
            row = rows[r]
            rows[r] = _strip_row([pv * row[j] - rv * pivot[j] for j in range(ncols)])
        pivots.append((prow, col))
        prow += 1
        if prow == len(rows):
            break
    return pivots


def solve_linear(A, b=None):
    """Solve A x = b exactly (b defaults to 0).

    A: list of rows of rationals (anything mpq() accepts).  Returns a
    SolveResult carrying rank, a particular solution (None when
    inconsistent or no b), and a kernel basis of primitive integer
    vectors.  Inconsistency is a state, not an error.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    aug = 1 if b is not None else 0
    rows = []
    for i in range(nrows):
        row = [mpq(x) for x in A[i]]
        if aug:
            row.append(mpq(b[i]))
        rows.append(_primitive_int_row(row))
    pivots = _reduced_echelon(rows)

    consistent = True
    pivot_cols = []
    for r, c in pivots:
        if aug and c == ncols:
            consistent = False
        else:
            pivot_cols.append(c)
    rank = len(pivot_cols)

    pivot_of_col = {}
    for r, c in pivots:
        if c < ncols:
            pivot_of_col[c] = r
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]

    kernel = []
    for f in free_cols:
        vec = [mpq(0)] * ncols
        vec[f] = mpq(1)
        for c, r in pivot_of_col.items():
            pv = rows[r][c]
            ent = rows[r][f]
            if ent:
                vec[c] = mpq(-ent, pv)
        kernel.append(_primitive_int_row(vec))
    kernel = [[mpq(x) for x in v] for v in kernel]

    particular = None
    if aug and consistent:
        particular = [mpq(0)] * ncols
        for c, r in pivot_of_col.items():
            particular[c] = mpq(rows[r][ncols], rows[r][c])
    return SolveResult(rank, tuple(pivot_cols), consistent, particular, kernel, nrows, ncols)


def kernel_basis(A):
    return solve_linear(A).kernel


def det_mpq(A):
    """Determinant of a square rational matrix (Bareiss, exact)."""
    n = len(A)
    if n == 0:
        return mpq(1)
    den = mpq(1)
    M = []
    for row in A:
        r = [mpq(x) for x in row]
        ints = _primitive_int_row(r)
        # recover the scale factor the primitivization removed
        scale = None
        for orig, newv in zip(r, ints):
            if newv:
                scale = orig / newv
                break
        if scale is None:
            return mpq(0)
        den = den * scale
        M.append(ints)
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if not M[k][k]:
            swap = None
            for r in range(k + 1, n):
                if M[r][k]:
                    swap = r
                    break
            if swap is None:
                return mpq(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = mpz(0)
        prev = M[k][k]
    return sign * den * M[n - 1][n - 1]


def mat_inverse(A):
    """Exact inverse of a square rational matrix; ValueError if singular."""
    n = len(A)
    cols = []
    for j in range(n):
        e = [mpq(1) if i == j else mpq(0) for i in range(n)]
        res = solve_linear(A, e)
        if not (res.consistent and res.rank == n):
            raise ValueError("singular matrix")
        cols.append(res.particular)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)), mpq(0)) for j in range(m)]
            for i in range(n)]


def matvec(A, v):
    return [sum((A[i][j] * v[j] for j in range(len(v))), mpq(0)) for i in range(len(A))]


def transpose(A):
    return [list(col) for col in zip(*A)]


def identity_matrix(n):
    return [[mpq(1) if i == j else mpq(0) for j in range(n)] for i in range(n)]


def _generic_is_zero(x):
    z = getattr(x, "is_zero", None)
    if z is not None:
        return x.is_zero()
    return x == 0


def pfaffian4(A):
    """Pfaffian of a 4x4 alternating matrix over any commutative ring.

    Rejects non-alternating input (nonzero diagonal or A[j][i] != -A[i][j]).
    """
    assert len(A) == 4 and all(len(r) == 4 for r in A)
    for i in range(4):
        if not _generic_is_zero(A[i][i]):
            raise ValueError("nonzero diagonal entry at %d" % i)
        for j in range(i + 1, 4):
            if not _generic_is_zero(A[i][j] + A[j][i]):
                raise ValueError("matrix is not alternating at (%d,%d)" % (i, j))
    return A[0][1] * A[2][3] - A[0][2] * A[1][3] + A[0][3] * A[1][2]


def det_poly(M):
    """Determinant of a square matrix of MPoly entries.

    Dynamic programming over column subsets (O(n 2^n) polynomial
    multiplications), division-free.
    """
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = None
    for row in M:
        for e in row:
            if isinstance(e, MPoly):
                nvars = e.n
                break
        if nvars is not None:
            break
    assert nvars is not None, "need at least one MPoly entry"
    minors = {(): MPoly.const(nvars, 1)}
    for k in range(n):
        nxt = {}
        for subset, minor in minors.items():
            if minor.is_zero():
                continue
            for j in range(n):
                if j in subset:
                    continue
                cell = M[k][j]
                if not isinstance(cell, MPoly):
                    cell = MPoly.const(nvars, cell)
                if cell.is_zero():
                    continue
                new = tuple(sorted(subset + (j,)))
                pos = new.index(j)
                term = cell * minor
                # Laplace expansion along row k: sign (-1)^(k + pos)
                if (k + pos) % 2:
                    term = -term
                if new in nxt:
                    nxt[new] = nxt[new] + term
                else:
                    nxt[new] = term
        minors = nxt
        if not minors:
            return MPoly.zero(nvars)
    return minors.get(tuple(range(n)), MPoly.zero(nvars))


# -- field-generic reduction (used with CycQ5 entries) -----------------

def rref_field(rows):
    """Reduced row echelon form over a field; entries need +,-,*,/ and
    an is_zero() method (or == 0).  Returns (rows, pivot column list).
    Operates on a copied list of lists.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    prow = 0
    for col in range(ncols):
        pr = None
        for r in range(prow, len(rows)):
            if not _generic_is_zero(rows[r][col]):
                pr = r
                break
        if pr is None:
            continue
        rows[prow], rows[pr] = rows[pr], rows[prow]
        pv = rows[prow][col]
        rows[prow] = [x / pv for x in rows[prow]]
        for r in range(len(rows)):
            if r != prow and not _generic_is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[prow])]
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return rows, pivots


def kernel_field(A, zero, one):
    """Kernel basis over a field (same entry protocol as rref_field)."""
    rows, pivots = rref_field(A)
    ncols = len(A[0]) if A else 0
    pivot_of_col = {c: i for i, c in enumerate(pivots)}
    basis = []
    for f in range(ncols):
        if f in pivot_of_col:
            continue
        vec = [zero] * ncols
        vec[f] = one
        for c, r in pivot_of_col.items():
            ent = rows[r][f]
            if not _generic_is_zero(ent):
                vec[c] = zero - ent
        basis.append(vec)
    return basis
