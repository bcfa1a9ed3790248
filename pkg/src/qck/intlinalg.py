"""Exact integer and rational linear algebra.

Matrices are lists of lists of Python ints (rows), so every computation is
arbitrary precision.  Provides Smith normal form with transformation
matrices, saturated integer kernels, rational rank, column-style Hermite
form, and the congruence normal form of skew-symmetric integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotSkewSymmetric(ValueError):
    pass


# ---------------------------------------------------------------------------
# basic matrix helpers


def shape(M):
    return (len(M), len(M[0]) if M else 0)


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(M):
    return [row[:] for row in M]


def transpose(M):
    r, c = shape(M)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def mat_mul(A, B):
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} times {rb}x{cb}")
    out = zeros(ra, cb)
    Bt = transpose(B)
    for i in range(ra):
        Ai = A[i]
        for j in range(cb):
            Bj = Bt[j]
            out[i][j] = sum(Ai[k] * Bj[k] for k in range(ca))
    return out


def mat_add(A, B):
    r, c = shape(A)
    return [[A[i][j] + B[i][j] for j in range(c)] for i in range(r)]


def mat_neg(A):
    return [[-x for x in row] for row in A]


def mat_eq(A, B):
    return shape(A) == shape(B) and all(ra == rb for ra, rb in zip(A, B))


def mat_vec(M, v):
    r, c = shape(M)
    if c != len(v):
        raise ValueError("shape mismatch")
    return [sum(M[i][j] * v[j] for j in range(c)) for i in range(r)]


def block_diag(*blocks):
    rows = sum(shape(b)[0] for b in blocks)
    cols = sum(shape(b)[1] for b in blocks)
    out = zeros(rows, cols)
    r0 = c0 = 0
    for b in blocks:
        br, bc = shape(b)
        for i in range(br):
            out[r0 + i][c0 : c0 + bc] = list(b[i])
        r0 += br
        c0 += bc
    return out


def is_skew_symmetric(H):
    r, c = shape(H)
    if r != c:
        return False
    return all(H[i][j] == -H[j][i] for i in range(r) for j in range(i, r))


# ---------------------------------------------------------------------------
# rank and kernels


def rank_over_Q(M):
    """Rank of an integer (or rational) matrix, by exact Gaussian elimination."""
    r, c = shape(M)
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        pv = A[row][col]
        for i in range(row + 1, r):
            if A[i][col] != 0:
                f = A[i][col] / pv
                A[i] = [a - f * b for a, b in zip(A[i], A[row])]
        row += 1
        rank += 1
        if row == r:
            break
    return rank


def solve_rational(A, rhs):
    """Solve A x = rhs exactly over Q; returns None if inconsistent.

    When the solution is not unique an arbitrary solution (free variables 0)
    is returned.
    """
    r, c = shape(A)
    M = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(A)]
    pivots = []
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        pv = M[row][col]
        M[row] = [x / pv for x in M[row]]
        for i in range(r):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
        if row == r:
            break
    for i in range(row, r):
        if M[i][c] != 0:
            return None
    x = [Fraction(0)] * c
    for i, col in enumerate(pivots):
        x[col] = M[i][c]
    return x


def invert_rational(M):
    """Exact inverse of a square matrix, entries as Fractions."""
    n, m = shape(M)
    if n != m:
        raise ValueError("not square")
    A = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return [row[n:] for row in A]


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M):
    """(U, D, V) with U M V = D, U, V unimodular, D diagonal, d1 | d2 | ...

    Diagonal entries are nonnegative and satisfy the divisibility chain; the
    identity U*M*V == D holds exactly.
    """
    r, c = shape(M)
    D = copy_matrix(M)
    U = identity(r)
    V = identity(c)

    def row_op(i, j, f):  # row_i -= f*row_j
        D[i] = [a - f * b for a, b in zip(D[i], D[j])]
        U[i] = [a - f * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, f):  # col_i -= f*col_j
        for row in D:
            row[i] -= f * row[j]
        for row in V:
            row[i] -= f * row[j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        # locate a nonzero pivot of minimal absolute value
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear column t and row t
            dirty = False
            for i in range(t + 1, r):
                if D[i][t] != 0:
                    f = D[i][t] // D[t][t]
                    row_op(i, t, f)
                    if D[i][t] != 0:  # remainder becomes the smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, c):
                if D[t][j] != 0:
                    f = D[t][j] // D[t][t]
                    col_op(j, t, f)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility fixup: every remaining entry must divide by pivot
            off = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                 if D[i][j] % D[t][t] != 0),
                None,
            )
            if off is None:
                break
            row_op(t, off[0], -1)  # mix the offending row into the pivot row
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def invariant_factors(M):
    """Nonzero diagonal of the Smith form, in divisibility order."""
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(shape(D))) if D[i][i] != 0]


def kernel_basis(M):
    """Z-basis of the saturated integer kernel lattice {v : M v = 0}.

    Returned vectors are columns of a unimodular matrix, hence primitive and
    spanning a saturated sublattice.
    """
    r, c = shape(M)
    if c == 0:
        return []
    _, D, V = smith_normal_form(M)
    rank = sum(1 for i in range(min(r, c)) if D[i][i] != 0)
    cols = transpose(V)
    return [list(cols[j]) for j in range(rank, c)]


def hermite_column_basis(M):
    """Basis of the lattice spanned by the columns of M, via column Hermite form.

    Returns a list of column vectors (each of length = row count of M); the
    list is empty when all columns vanish.  The basis is in column echelon
    form, canonical for a given column span.
    """
    r, c = shape(M)
    cols = [list(col) for col in transpose(M)]
    basis = []
    row = 0
    work = cols
    while row < r and work:
        nz = [col for col in work if col[row] != 0]
        rest = [col for col in work if col[row] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda col: abs(col[row]))
            a = nz[0]
            out = [a]
            for col in nz[1:]:
                f = col[row] // a[row]
                newcol = [x - f * y for x, y in zip(col, a)]
                (rest if newcol[row] == 0 else out).append(newcol)
            nz = out
        if nz:
            lead = nz[0]
            if lead[row] < 0:
                lead = [-x for x in lead]
            # reduce earlier basis vectors against the new pivot
            for b in basis:
                if b[row] != 0:
                    f = b[row] // lead[row]
                    for i in range(r):
                        b[i] -= f * lead[i]
            basis.append(lead)
        work = [col for col in rest if any(col)]
        row += 1
    return basis


# ---------------------------------------------------------------------------
# skew-symmetric congruence normal form


@dataclass
class SkewNormalForm:
    Q: list  # unimodular, Q^T H Q = diag(m1 S, ..., ml S, 0, ...)
    multipliers: list
    zero_dim: int


def skew_normal_form(H):
    """Congruence normal form of a skew-symmetric integer matrix.

    Finds unimodular Q with Q^T H Q = diag(m1*S, ..., ml*S, 0, ..., 0),
    S = [[0,1],[-1,0]], and m1 | m2 | ... | ml positive.
    """
    if not is_skew_symmetric(H):
        raise NotSkewSymmetric("matrix is not skew-symmetric")
    n = shape(H)[0]
    A = copy_matrix(H)
    Q = identity(n)

    def col_add(i, j, f):  # col_i += f*col_j, with the congruent row op
        for row in A:
            row[i] += f * row[j]
        for k in range(n):
            A[i][k] += f * A[j][k]
        for row in Q:
            row[i] += f * row[j]

    def swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        A[i], A[j] = A[j], A[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    s = 0
    while s + 1 < n:
        # minimal nonzero entry in the trailing block
        best = None
        for i in range(s, n):
            for j in range(i + 1, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        if i0 != s:
            swap(s, i0)
        if j0 != s + 1:
            swap(s + 1, j0)
        while True:
            dirty = False
            p = A[s][s + 1]
            # clear row s beyond s+1 (and by skew symmetry column s)
            for j in range(s + 2, n):
                if A[s][j] != 0:
                    f = A[s][j] // p
                    col_add(j, s + 1, -f)
                    if A[s][j] != 0:
                        swap(s + 1, j)
                        dirty = True
                        break
            if dirty:
                continue
            # clear row s+1 beyond s+1 (uses A[s+1][s] = -p)
            for j in range(s + 2, n):
                if A[s + 1][j] != 0:
                    f = A[s + 1][j] // p
                    col_add(j, s, f)
                    if A[s + 1][j] != 0:
                        swap(s, j)
                        dirty = True
                        break
            if dirty:
                continue
            # divisibility: remaining entries must be multiples of the pivot
            off = next(
                ((i, j) for i in range(s + 2, n) for j in range(i + 1, n)
                 if A[i][j] % p != 0),
                None,
            )
            if off is None:
                break
            col_add(s, off[0], 1)  # pivot row regains a non-multiple
        if A[s][s + 1] < 0:
            swap(s, s + 1)
        s += 2

    mult = [A[i][i + 1] for i in range(0, s, 2)]
    nf = SkewNormalForm(Q=Q, multipliers=mult, zero_dim=n - s)
    # exact verification of the congruence identity
    target = block_diag(*([[[0, m], [-m, 0]] for m in mult] + [zeros(n - s, n - s)])) if n else []
    if n and not mat_eq(mat_mul(transpose(Q), mat_mul(H, Q)), target):
        raise AssertionError("skew normal form verification failed")
    for a, b in zip(mult, mult[1:]):
        if b % a != 0:
            raise AssertionError("skew multipliers do not form a divisibility chain")
    return nf


def skew_multipliers(H):
    return skew_normal_form(H).multipliers


# ---------------------------------------------------------------------------
# plain-text / JSON matrix I/O (one row per line, whitespace separated)


def parse_matrix_text(text):
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([int(tok) for tok in line.split()])
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows in matrix input")
    return rows


def format_matrix_text(M):
    return "\n".join(" ".join(str(x) for x in row) for row in M)
