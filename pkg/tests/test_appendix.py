import random

import pytest

from conftest import random_double_word
from qck import appendix_congruence as ac
from qck import intlinalg, weyl


def test_build_word_matrices_rank_one(A1):
    m = ac.build_word_matrices(A1, (1,))
    assert m.beta == [(1,)]
    assert m.B == [[0]]
    assert m.P == [[1]]


def test_build_word_matrices_a2_examples(A2):
    m = ac.build_word_matrices(A2, (1, 2))
    assert m.beta == [(1, 0), (1, 1)]
    assert m.Btilde[0][1] == -1  # (alpha_1, alpha_2)
    assert m.B[0][1] == 1  # (beta_1, beta_2) = (alpha_1, alpha_1 + alpha_2)
    m = ac.build_word_matrices(A2, (1, 2, 1))
    assert sorted(m.beta) == [(0, 1), (1, 0), (1, 1)]  # all three positive roots


def test_build_word_matrices_rejects_non_reduced(A2):
    with pytest.raises(weyl.NonReducedWord):
        ac.build_word_matrices(A2, (1, 1))


def test_triangularity_and_unimodularity(A3):
    from conftest import exact_det

    for cls in weyl.all_reduced_words(A3, 5):
        for word in cls:
            m = ac.build_word_matrices(A3, word)
            l = len(word)
            for s in range(l):
                for t in range(s + 1):
                    assert m.B[s][t] == 0 and m.Btilde[s][t] == 0
                assert m.P[s][s] == 1 and m.Ptilde[s][s] == 1
            if l:
                assert abs(exact_det(m.P)) == 1
            # A and Atilde are skew
            assert intlinalg.is_skew_symmetric(m.A)
            assert intlinalg.is_skew_symmetric(m.Atilde)


def test_lemma_exhaustive_s3_s4(A2, A3):
    for datum in (A2, A3):
        for cls in weyl.all_reduced_words(datum, 6):
            for word in cls:
                rep = ac.verify_lemma(datum, word)
                assert rep["ok"], (word, rep)


def test_lemma_general_cartan():
    b2 = weyl.RootDatum(n=2, cartan=((2, -2), (-1, 2)), d=(1, 2))
    for cls in weyl.all_reduced_words(b2, 4):
        for word in cls:
            rep = ac.verify_lemma(b2, word)
            assert rep["ok"], (word, rep)


def test_congruence_examples(A1, A2):
    rep = ac.congruence_check(A2, (1, 2, 1, -1, -2))
    assert rep["ok"] and rep["rank_script_h"] == 6
    rep = ac.congruence_check(A1, (-1, 1))
    assert rep["ok"] and rep["rank_script_h"] == 2
    rep = ac.congruence_check(A2, ())
    assert rep["ok"] and rep["rank_script_h"] == 0


def test_congruence_random_a3(A3):
    rng = random.Random(14)
    for _ in range(40):
        word = random_double_word(A3, rng, 6)
        rep = ac.congruence_check(A3, word)
        assert rep["ok"], (word, rep)


def test_sign_class_extraction_preserves_order():
    assert ac._sign_class_words((1, -2, 3, -1, 2)) == ((1, 3, 2), (2, 1))
