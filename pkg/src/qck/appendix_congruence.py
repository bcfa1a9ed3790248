"""Root-sequence matrices of reduced words and the congruence between the
two skew matrices attached to a double word.

For a reduced word j the roots beta_k = s_{j_1}...s_{j_{k-1}}(alpha_{j_k})
give strictly upper-triangular pairing matrices B (in the betas) and Bt (in
the simple roots), their antisymmetrizations A and At, weight-root pairing
matrices C and Ct, and unitriangular base-change matrices P = I + D^{-1}B,
Pt = I + D^{-1}Bt satisfying

    (beta_1 .. beta_l) = (alpha_{j_1} .. alpha_{j_l}) P,
    (alpha_{j_1} .. alpha_{j_l}) = (beta_1 .. beta_l) Pt,
    Pt P = P Pt = I,            Ct P = C,        P^T At P = -A.

Stacking the positive-letter and negative-letter data of a double word gives
Ht (simple-root form) and script-H (beta form) with Q^T Ht Q = script-H for
Q = diag(P(plus), P(minus), I_n); script-H has rank l(w1)+l(w2)+rank(w1-w2)
and shares its skew congruence invariants with the commutation matrix of the
word's localized torus.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg, strings, weyl
from .weyl import NonReducedWord

# note: pairing matrices use the plain symmetrized form (alpha_i, alpha_j) =
# d_i c_ij, so that D^{-1}B and D^{-1}Bt have the exact coroot pairings as
# entries and stay integral for every symmetrizable datum


@dataclass
class ReducedWordMatrices:
    word: tuple
    beta: list  # roots in alpha-basis coordinates
    B: list
    Btilde: list
    A: list
    Atilde: list
    C: list
    Ctilde: list
    D: list
    P: list
    Ptilde: list


def _beta_roots(datum, word):
    """beta_k = s_{j_1}...s_{j_{k-1}}(alpha_{j_k}) in alpha-basis coordinates."""
    betas = []
    for k in range(len(word)):
        coords = [1 if t == word[k] - 1 else 0 for t in range(datum.n)]
        for idx in range(k - 1, -1, -1):
            i = word[idx]
            pair = sum(datum.cartan[i - 1][t] * coords[t] for t in range(datum.n))
            coords[i - 1] -= pair
        betas.append(tuple(coords))
    return betas


def _root_inner(datum, c1, c2):
    """(beta, beta') from alpha-coordinates via the symmetrized Cartan form."""
    n = datum.n
    return sum(
        c1[i] * c2[j] * datum.d[i] * datum.cartan[i][j]
        for i in range(n)
        for j in range(n)
    )


def build_word_matrices(datum, word):
    word = tuple(word)
    if not weyl.is_reduced(datum, word):
        raise NonReducedWord(f"{word} is not reduced")
    l = len(word)
    n = datum.n
    betas = _beta_roots(datum, word)

    B = intlinalg.zeros(l, l)
    Bt = intlinalg.zeros(l, l)
    for s in range(l):
        for t in range(s + 1, l):
            B[s][t] = _root_inner(datum, betas[s], betas[t])
            Bt[s][t] = datum.sym(word[s], word[t])
    A = [[B[s][t] - B[t][s] for t in range(l)] for s in range(l)]
    At = [[Bt[s][t] - Bt[t][s] for t in range(l)] for s in range(l)]

    # C_st = (omega_s, beta_t) = d_s * (alpha-coordinate s of beta_t)
    C = [[datum.d[s] * betas[t][s] for t in range(l)] for s in range(n)]
    Ct = [[datum.d[s] * (1 if word[t] - 1 == s else 0) for t in range(l)] for s in range(n)]

    D = [datum.d[word[k] - 1] for k in range(l)]
    P = intlinalg.identity(l)
    Pt = intlinalg.identity(l)
    for s in range(l):
        for t in range(l):
            if B[s][t] % D[s] != 0 or Bt[s][t] % D[s] != 0:
                raise AssertionError("pairing matrices are not divisible by the symmetrizers")
            P[s][t] += B[s][t] // D[s]
            Pt[s][t] += Bt[s][t] // D[s]

    return ReducedWordMatrices(
        word=word, beta=betas, B=B, Btilde=Bt, A=A, Atilde=At,
        C=C, Ctilde=Ct, D=D, P=P, Ptilde=Pt,
    )


def verify_lemma(datum, word):
    """Exact checks of the base-change identities for one reduced word.

    Returns a dict with booleans: beta_from_alpha ((beta) = (alpha) P),
    alpha_from_beta ((alpha) = (beta) Pt), product_identity (Pt P = I),
    plus the two derived congruence facts used downstream (Ct P = C and
    P^T At P = -A).
    """
    word = tuple(word)
    mats = build_word_matrices(datum, word)
    l = len(word)
    n = datum.n
    alpha_cols = [[1 if t == word[k] - 1 else 0 for k in range(l)] for t in range(n)]
    beta_cols = [[mats.beta[k][t] for k in range(l)] for t in range(n)]
    beta_from_alpha = intlinalg.mat_eq(intlinalg.mat_mul(alpha_cols, mats.P), beta_cols) if l else True
    alpha_from_beta = intlinalg.mat_eq(intlinalg.mat_mul(beta_cols, mats.Ptilde), alpha_cols) if l else True
    product_identity = intlinalg.mat_eq(
        intlinalg.mat_mul(mats.Ptilde, mats.P), intlinalg.identity(l)
    )
    ct_p = intlinalg.mat_eq(intlinalg.mat_mul(mats.Ctilde, mats.P), mats.C) if l else True
    pap = intlinalg.mat_eq(
        intlinalg.mat_mul(
            intlinalg.transpose(mats.P), intlinalg.mat_mul(mats.Atilde, mats.P)
        ),
        intlinalg.mat_neg(mats.A),
    )
    return {
        "word": word,
        "beta_from_alpha": beta_from_alpha,
        "alpha_from_beta": alpha_from_beta,
        "product_identity": product_identity,
        "ct_p_equals_c": ct_p,
        "pt_at_p_equals_minus_a": pap,
        "ok": all([beta_from_alpha, alpha_from_beta, product_identity, ct_p, pap]),
    }


def _sign_class_words(word):
    plus = tuple(e for e in word if e > 0)
    minus = tuple(-e for e in word if e < 0)
    return plus, minus


def h_tilde(datum, word):
    """Simple-root form of the reordered commutation matrix:
    [[-At(plus), 0, -Ct(plus)^T], [0, At(minus), Ct(minus)^T],
     [Ct(plus), -Ct(minus), 0]]."""
    plus, minus = _sign_class_words(word)
    mp = build_word_matrices(datum, plus)
    mm = build_word_matrices(datum, minus)
    lp, lm, n = len(plus), len(minus), datum.n
    size = lp + lm + n
    H = intlinalg.zeros(size, size)
    for s in range(lp):
        for t in range(lp):
            H[s][t] = -mp.Atilde[s][t]
    for s in range(lm):
        for t in range(lm):
            H[lp + s][lp + t] = mm.Atilde[s][t]
    for s in range(n):
        for t in range(lp):
            H[lp + lm + s][t] = mp.Ctilde[s][t]
            H[t][lp + lm + s] = -mp.Ctilde[s][t]
        for t in range(lm):
            H[lp + lm + s][lp + t] = -mm.Ctilde[s][t]
            H[lp + t][lp + lm + s] = mm.Ctilde[s][t]
    return H


def script_h(datum, word):
    """Beta form: [[A(plus), 0, -C(plus)^T], [0, -A(minus), C(minus)^T],
    [C(plus), -C(minus), 0]]."""
    plus, minus = _sign_class_words(word)
    mp = build_word_matrices(datum, plus)
    mm = build_word_matrices(datum, minus)
    lp, lm, n = len(plus), len(minus), datum.n
    size = lp + lm + n
    H = intlinalg.zeros(size, size)
    for s in range(lp):
        for t in range(lp):
            H[s][t] = mp.A[s][t]
    for s in range(lm):
        for t in range(lm):
            H[lp + s][lp + t] = -mm.A[s][t]
    for s in range(n):
        for t in range(lp):
            H[lp + lm + s][t] = mp.C[s][t]
            H[t][lp + lm + s] = -mp.C[s][t]
        for t in range(lm):
            H[lp + lm + s][lp + t] = -mm.C[s][t]
            H[lp + t][lp + lm + s] = mm.C[s][t]
    return H


def congruence_check(datum, word):
    """Verify, exactly: (a) Q^T Ht Q = script-H with Q = diag(P+, P-, I_n),
    (b) rank script-H = l(w1) + l(w2) + rank(w1 - w2), (c) the skew
    congruence multipliers of Ht, script-H, and the torus commutation matrix
    H(i~) all agree (a complete congruence invariant, stronger than rank)."""
    word = tuple(word)
    w1, w2, _ = weyl.split_double_word(datum, word)
    plus, minus = _sign_class_words(word)
    mp = build_word_matrices(datum, plus)
    mm = build_word_matrices(datum, minus)
    Ht = h_tilde(datum, word)
    Hs = script_h(datum, word)
    Q = intlinalg.block_diag(mp.P, mm.P, intlinalg.identity(datum.n))
    congruent = intlinalg.mat_eq(
        intlinalg.mat_mul(intlinalg.transpose(Q), intlinalg.mat_mul(Ht, Q)), Hs
    )

    rank_script = intlinalg.rank_over_Q(Hs)
    diff = [
        [a - b for a, b in zip(r1, r2)]
        for r1, r2 in zip(weyl.weyl_matrix(datum, w1), weyl.weyl_matrix(datum, w2))
    ]
    rank_expected = len(w1) + len(w2) + intlinalg.rank_over_Q(diff)

    mult_ht = intlinalg.skew_multipliers(Ht)
    mult_hs = intlinalg.skew_multipliers(Hs)
    torus_H = strings.string_matrices(datum, word).H
    mult_torus = intlinalg.skew_multipliers(torus_H)

    return {
        "word": word,
        "q_congruence": congruent,
        "rank_script_h": rank_script,
        "rank_expected": rank_expected,
        "rank_ok": rank_script == rank_expected,
        "multipliers": mult_hs,
        "multipliers_agree": mult_ht == mult_hs == mult_torus,
        "ok": congruent and rank_script == rank_expected and mult_ht == mult_hs == mult_torus,
    }
