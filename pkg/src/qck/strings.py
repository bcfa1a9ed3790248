"""Weight strings and the structural invariants of the localized algebra
attached to a signed double word.

A weight string of type i~ starting at nu is determined by its nonnegative
steps j_k: mu_k = mu_{k-1} - j_k * sgn(i~_k) * alpha_{|i~_k|}.  The string
carries the exponent monomial x^a y^b with

    a_k = (mu_{k-1} + mu_k, alpha_{|i~_k|}^vee) / 2,
    b_k = |(mu_{k-1} - mu_k, alpha_{|i~_k|}^vee)| / 2 = j_k.

The generator strings (constant strings at fundamental weights, and the
step strings) assemble into integer matrices whose ranks and congruence
invariants describe the localized algebra: its dimension, center, diagonal
subtorus, and the 2-generator torus factors of the centralizer complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intlinalg, weyl
from .weyl import NonReducedWord


class InvalidString(ValueError):
    pass


class CrossCheckFailed(RuntimeError):
    """Internal consistency failure between two independent computations."""


@dataclass(frozen=True)
class WeightString:
    word: tuple
    start: tuple
    steps: tuple

    def __post_init__(self):
        if len(self.steps) != len(self.word):
            raise InvalidString("step count != word length")
        if any(j < 0 for j in self.steps):
            raise InvalidString("steps must be nonnegative")

    def weights(self, datum):
        """The full tuple (mu_0, ..., mu_m)."""
        mus = [tuple(self.start)]
        for e, j in zip(self.word, self.steps):
            sgn = 1 if e > 0 else -1
            alpha = datum.simple_root(abs(e))
            mus.append(tuple(m - j * sgn * a for m, a in zip(mus[-1], alpha)))
        return mus

    def end(self, datum):
        return self.weights(datum)[-1]


def constant_string(word, mu):
    return WeightString(word=tuple(word), start=tuple(mu), steps=(0,) * len(word))


def exponents(datum, ws: WeightString):
    """The (a, b) exponent vectors of the monomial I(mu) attached to a string."""
    mus = ws.weights(datum)
    a = []
    b = []
    for k, e in enumerate(ws.word):
        i = abs(e)
        num = weyl.pairing(mus[k], i) + weyl.pairing(mus[k + 1], i)
        if num % 2 != 0:
            raise InvalidString("half-integral exponent; string is inconsistent")
        a.append(num // 2)
        b.append(ws.steps[k])
    return tuple(a), tuple(b)


def string_monomial(datum, ws, m=None, D=None):
    """I(mu) = x^a y^b as a QTorusElement."""
    from .qtorus import QTorusElement

    a, b = exponents(datum, ws)
    word = ws.word
    if D is None:
        D = tuple(datum.d[abs(e) - 1] for e in word)
    return QTorusElement.monomial(len(word), D, a, b)


def monomial_to_string(datum, word, nu, a, b):
    """The unique string with start nu and steps b whose a-vector matches, or
    None when the given exponents are inconsistent with any string."""
    word = tuple(word)
    if len(a) != len(word) or len(b) != len(word):
        return None
    if any(j < 0 for j in b):
        return None
    ws = WeightString(word=word, start=tuple(nu), steps=tuple(b))
    got_a, _ = exponents(datum, ws)
    if got_a != tuple(a):
        return None
    return ws


def enumerate_strings(datum, word, nu, mu, max_total_step):
    """All weight strings from nu to mu of the word's type with total step
    sum <= max_total_step, in lexicographic step order."""
    word = tuple(word)
    nu = tuple(nu)
    mu = tuple(mu)
    out = []

    def rec(k, current, budget, steps):
        if k == len(word):
            if current == mu:
                out.append(WeightString(word=word, start=nu, steps=tuple(steps)))
            return
        e = word[k]
        sgn = 1 if e > 0 else -1
        alpha = datum.simple_root(abs(e))
        for j in range(budget + 1):
            nxt = tuple(c - j * sgn * a for c, a in zip(current, alpha))
            steps.append(j)
            rec(k + 1, nxt, budget - j, steps)
            steps.pop()

    rec(0, nu, max_total_step, [])
    return out


# ---------------------------------------------------------------------------
# structural matrices


@dataclass
class StringMatrices:
    word: tuple
    D: tuple  # diagonal of D_i~
    Omega: list  # m x n
    Lambda: list  # m x m, lower triangular, unimodular
    Phi: list  # 2m x (n+m), columns = exponent vectors of the generators
    H: list  # (n+m) x (n+m) skew, q-commute indices of the generators
    OmegaTilde: list  # m x n, Lambda^{-1} Omega
    Theta: list = field(default=None)  # n x s, basis of the column span of OmegaTilde^T D
    PhiTilde: list = field(default=None)  # 2m x (n+m), Z-equivalent generator matrix


def string_matrices(datum, word):
    """Exact structural matrices of the localized algebra for a double word."""
    word = tuple(word)
    weyl.split_double_word(datum, word)  # validates; raises NonReducedWord
    n = datum.n
    m = len(word)
    letters = [abs(e) for e in word]
    signs = [1 if e > 0 else -1 for e in word]
    D = tuple(datum.d[i - 1] for i in letters)

    # Omega_st = (alpha_{|i_s|}^vee, omega_t)
    Omega = [[1 if letters[s] == t + 1 else 0 for t in range(n)] for s in range(m)]
    # Lambda_st = 0 (s<t), -sgn(i_t) (s=t), -sgn(i_t)(alpha_{|i_s|}^vee, alpha_{|i_t|}) (s>t)
    Lambda = [
        [
            0
            if s < t
            else (
                -signs[t]
                if s == t
                else -signs[t] * datum.cartan[letters[s] - 1][letters[t] - 1]
            )
            for t in range(m)
        ]
        for s in range(m)
    ]

    # Phi = [[Omega, Lambda], [0, I_m]]  (x-exponents on top, y-exponents below)
    Phi = intlinalg.zeros(2 * m, n + m)
    for s in range(m):
        for t in range(n):
            Phi[s][t] = Omega[s][t]
        for t in range(m):
            Phi[s][n + t] = Lambda[s][t]
            Phi[m + s][n + t] = 1 if s == t else 0

    # H = [[0, Omega^T D], [-D Omega, Lambda^T D - D Lambda]]
    H = intlinalg.zeros(n + m, n + m)
    for i in range(n):
        for k in range(m):
            v = Omega[k][i] * D[k]
            H[i][n + k] = v
            H[n + k][i] = -v
    for k in range(m):
        for l in range(m):
            H[n + k][n + l] = Lambda[l][k] * D[l] - D[k] * Lambda[k][l]

    # OmegaTilde = Lambda^{-1} Omega, exact (Lambda is unimodular triangular)
    LambdaInvQ = intlinalg.invert_rational(Lambda)
    LambdaInv = [[int(x) for x in row] for row in LambdaInvQ]
    if not intlinalg.mat_eq(
        intlinalg.mat_mul(Lambda, LambdaInv), intlinalg.identity(m) if m else []
    ):
        raise AssertionError("Lambda inverse is not integral")
    OmegaTilde = intlinalg.mat_mul(LambdaInv, Omega) if m else []

    # PhiTilde = [[0, I_m], [OmegaTilde, Lambda^{-1}]]
    PhiTilde = intlinalg.zeros(2 * m, n + m)
    for s in range(m):
        PhiTilde[s][n + s] = 1
        for t in range(n):
            PhiTilde[m + s][t] = OmegaTilde[s][t]
        for t in range(m):
            PhiTilde[m + s][n + t] = LambdaInv[s][t]

    # Theta: basis of the lattice spanned by the columns of OmegaTilde^T D
    OtD = [[OmegaTilde[k][i] * D[k] for k in range(m)] for i in range(n)]
    theta_cols = intlinalg.hermite_column_basis(OtD)
    Theta = [[col[i] for col in theta_cols] for i in range(n)]

    return StringMatrices(
        word=word,
        D=D,
        Omega=Omega,
        Lambda=Lambda,
        Phi=Phi,
        H=H,
        OmegaTilde=OmegaTilde,
        Theta=Theta,
        PhiTilde=PhiTilde,
    )


def generator_strings(datum, word):
    """The constant strings at fundamental weights and the step strings whose
    exponent vectors are the columns of Phi."""
    word = tuple(word)
    out = [constant_string(word, weyl.fundamental_weight(datum, i)) for i in range(1, datum.n + 1)]
    for k in range(len(word)):
        steps = tuple(1 if t == k else 0 for t in range(len(word)))
        out.append(WeightString(word=word, start=weyl.zero_weight(datum), steps=steps))
    return out


@dataclass
class WordInvariants:
    m: int
    s: int
    n_dim: int
    d: int
    k: int
    rank_H: int
    multipliers: list


def invariants(datum, word):
    """Structural invariants of the localized algebra, with the rank
    identities cross-checked against the Weyl-matrix oracle.

    A failing cross-check raises CrossCheckFailed: it means two formulas the
    theory proves equal disagreed, i.e. an implementation bug.
    """
    word = tuple(word)
    w1, w2, supp = weyl.split_double_word(datum, word)
    mats = string_matrices(datum, word)
    m = len(word)
    n = datum.n

    rank_phi = intlinalg.rank_over_Q(mats.Phi) if m else 0
    s = intlinalg.rank_over_Q(mats.OmegaTilde) if m else 0
    n_dim = m + s
    if rank_phi != n_dim or s != len(supp):
        raise CrossCheckFailed(
            f"rank Phi = {rank_phi} but m + rank OmegaTilde = {n_dim}, |supp| = {len(supp)}"
        )

    rank_H = intlinalg.rank_over_Q(mats.H)
    d = m + n - rank_H

    dk = weyl.ker_rank(datum, w1, w2)
    if d != dk:
        raise CrossCheckFailed(f"d = m+n-rank H = {d} but dim ker(w1-w2) = {dk}")
    if rank_H != m + (n - dk):
        raise CrossCheckFailed(f"rank H = {rank_H} != m + rank(w1-w2) = {m + n - dk}")

    # The center of the localized torus lives on the rank-(m+s) exponent
    # lattice, so its dimension is (m+s) - rank_H; this agrees with
    # d = m+n-rank_H exactly on full-support words (s = n).  k counts the
    # 2-generator torus factors of the centralizer complement.
    d_center = m + s - rank_H
    if (m - d_center - s) % 2 != 0 or m - d_center - s < 0:
        raise CrossCheckFailed(
            f"k = (m-d_center-s)/2 is not a nonnegative integer: m={m} d_center={d_center} s={s}"
        )
    k = (m - d_center - s) // 2
    if s == n and k != (m - d - s) // 2:
        raise CrossCheckFailed(f"full-support k mismatch: {k} != (m-d-s)/2")

    mult = cprime_multipliers(datum, word)
    if len(mult) != k:
        raise CrossCheckFailed(f"centralizer-complement multipliers {mult} do not match k={k}")

    return WordInvariants(m=m, s=s, n_dim=n_dim, d=d, k=k, rank_H=rank_H, multipliers=mult)


def _skew_gram(D):
    """The 2m x 2m skew form g(a + b, a' + b') = a^T D b' - a'^T D b on
    concatenated exponent vectors."""
    m = len(D)
    G = intlinalg.zeros(2 * m, 2 * m)
    for k in range(m):
        G[k][m + k] = D[k]
        G[m + k][k] = -D[k]
    return G


def cprime_multipliers(datum, word):
    """Multipliers of the 2-generator torus factors in the centralizer of the
    diagonal subtorus, computed from the exponent lattices.

    The centralizer lattice is the saturated annihilator, inside the
    generator lattice, of the diagonal sublattice under the skew form; the
    induced form's congruence normal form yields the multipliers.
    """
    word = tuple(word)
    mats = string_matrices(datum, word)
    m = len(word)
    n = datum.n
    if m == 0:
        return []
    G = _skew_gram(mats.D)

    # lattice of all generator exponents (columns of PhiTilde), as a basis
    lat_cols = intlinalg.hermite_column_basis(mats.PhiTilde)
    L = [[col[i] for col in lat_cols] for i in range(2 * m)]  # 2m x (m+s)

    # diagonal sublattice: x-exponent zero, y-exponents spanned by OmegaTilde
    diag = intlinalg.zeros(2 * m, n)
    for i in range(n):
        for k in range(m):
            diag[m + k][i] = mats.OmegaTilde[k][i]
    diag_cols = intlinalg.hermite_column_basis(diag)
    if not diag_cols:
        L0 = intlinalg.zeros(2 * m, 0)
    else:
        L0 = [[col[i] for col in diag_cols] for i in range(2 * m)]

    # annihilator of L0 inside L: kernel of L0^T G L
    M0 = intlinalg.mat_mul(intlinalg.transpose(L0), intlinalg.mat_mul(G, L))
    ker = intlinalg.kernel_basis(M0)
    if not ker:
        return []
    K = [[vec[j] for vec in ker] for j in range(len(ker[0]))]  # (m+s) x r
    C = intlinalg.mat_mul(L, K)  # centralizer lattice basis, 2m x r

    induced = intlinalg.mat_mul(intlinalg.transpose(C), intlinalg.mat_mul(G, C))
    return list(intlinalg.skew_normal_form(induced).multipliers)


def psi_matrix(datum, word):
    """The 2n x (n+m) block matrix whose nonzero Smith invariant factors being
    1 certifies that the central generators extend to a lattice basis."""
    word = tuple(word)
    w1, w2, _ = weyl.split_double_word(datum, word)
    n = datum.n
    m = len(word)
    W1 = weyl.weyl_matrix(datum, w1)
    W2 = weyl.weyl_matrix(datum, w2)
    top = [[W1[t][s] for t in range(n)] for s in range(n)]  # (w1(omega_s), alpha_t^vee)
    bot = [[-W2[t][s] for t in range(n)] for s in range(n)]
    prefix_minus = ()
    prefix_plus = ()
    for e in word:
        i = abs(e)
        if e < 0:
            prefix_minus = prefix_minus + (i,)
            imgs = [
                weyl.apply_word(datum, prefix_minus, weyl.fundamental_weight(datum, s + 1))
                for s in range(n)
            ]
            for s in range(n):
                top[s].append(weyl.pairing(imgs[s], i))
                bot[s].append(0)
        else:
            prefix_plus = prefix_plus + (i,)
            imgs = [
                weyl.apply_word(datum, prefix_plus, weyl.fundamental_weight(datum, s + 1))
                for s in range(n)
            ]
            for s in range(n):
                top[s].append(0)
                bot[s].append(weyl.pairing(imgs[s], i))
    return [top[s] for s in range(n)] + [bot[s] for s in range(n)]


def psi_check(datum, word):
    """(ok, invariant_factors): ok iff every nonzero Smith invariant factor of
    the Psi block matrix is 1, and the same holds for the reduced matrix
    ((omega_s, w_{<=t}^{sgn}(alpha_{|i_t|}^vee)))."""
    word = tuple(word)
    psi = psi_matrix(datum, word)
    factors = intlinalg.invariant_factors(psi)
    ok = all(f == 1 for f in factors)
    red = reduced_psi_matrix(datum, word)
    red_factors = intlinalg.invariant_factors(red)
    ok = ok and all(f == 1 for f in red_factors)
    return ok, factors


def reduced_psi_matrix(datum, word):
    """n x m matrix with entries (omega_s, w_{<=t}^{sgn(i_t)}(alpha_{|i_t|}^vee))
    = ((w_{<=t}^{sgn(i_t)})^{-1}(omega_s), alpha_{|i_t|}^vee)."""
    word = tuple(word)
    n = datum.n
    cols = []
    prefix_minus = ()  # reduced words of the sign-class prefixes
    prefix_plus = ()
    for e in word:
        if e < 0:
            prefix_minus = prefix_minus + (-e,)
            w = prefix_minus
        else:
            prefix_plus = prefix_plus + (e,)
            w = prefix_plus
        winv = tuple(reversed(w))
        col = []
        for s in range(1, n + 1):
            img = weyl.apply_word(datum, winv, weyl.fundamental_weight(datum, s))
            col.append(weyl.pairing(img, abs(e)))
        cols.append(col)
    return [[cols[t][s] for t in range(len(word))] for s in range(n)]
