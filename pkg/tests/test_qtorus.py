import random
from fractions import Fraction

import pytest

from qck import qtorus
from qck.qtorus import QTorusElement, ShapeMismatch, coeff_qpow


def mono(m, D, a, b, qexp=0, c=1):
    return QTorusElement.monomial(m, D, a, b, {(qexp, ()): c})


def _random_element(rng, m, D, nterms=3, span=3):
    el = QTorusElement.zero(m, D)
    for _ in range(rng.randint(1, nterms)):
        a = tuple(rng.randint(-span, span) for _ in range(m))
        b = tuple(rng.randint(-span, span) for _ in range(m))
        el = el + mono(m, D, a, b, rng.randint(-2, 2), rng.randint(-3, 3) or 1)
    return el


def test_multiply_single_factor_rearrangement():
    x = mono(1, (1,), (1,), (0,))
    y = mono(1, (1,), (0,), (1,))
    assert y * x == mono(1, (1,), (1,), (1,), qexp=-1)


def test_multiply_inverse_pair():
    D = (1, 2)
    u = mono(2, D, (1, -2), (0, 3))
    v = mono(2, D, (-1, 2), (0, -3))
    prod = u * v
    ((key, c),) = prod.terms.items()
    assert key == ((0, 0), (0, 0))
    # q-exponent b^T D a with a=(1,-2), b=(0,3): 3*2*(-2) = -12
    assert c == {(-12, ()): 1}
    assert u * u.inverse() == QTorusElement.one(2, D)


def test_multiply_binomial_square():
    x = mono(1, (1,), (1,), (0,))
    y = mono(1, (1,), (0,), (1,))
    s = x + y
    got = s * s
    expected = (
        mono(1, (1,), (2,), (0,))
        + mono(1, (1,), (0,), (2,))
        + mono(1, (1,), (1,), (1,))
        + mono(1, (1,), (1,), (1,), qexp=-1)
    )
    assert got == expected


def test_multiply_associative_randomized():
    rng = random.Random(99)
    for _ in range(30):
        m = rng.randint(1, 6)
        D = tuple(rng.randint(1, 3) for _ in range(m))
        u, v, w = (_random_element(rng, m, D, 4) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        one = QTorusElement.one(m, D)
        assert u * one == u == one * u


def test_shape_mismatch():
    u = mono(1, (1,), (1,), (0,))
    v = mono(2, (1, 1), (1, 0), (0, 0))
    with pytest.raises(ShapeMismatch):
        u * v
    w = mono(1, (2,), (1,), (0,))
    with pytest.raises(ShapeMismatch):
        u * w


@pytest.mark.parametrize(
    "u,v,D,expected",
    [
        (((1, 0), (0, 0)), ((0, 0), (1, 0)), (1, 1), 1),
        (((2, 1), (3, -1)), ((2, 1), (3, -1)), (1, 2), 0),
        (
            ((-3, 1, -3, -1, -1), (0, 0, 0, 0, 0)),
            ((0, 0, 0, 0, 0), (1, 1, 1, 1, 1)),
            (1, 1, 1, 1, 1),
            -7,
        ),
    ],
)
def test_q_commute_index_examples(u, v, D, expected):
    assert qtorus.q_commute_index(u, v, D) == expected
    assert qtorus.q_commute_index(v, u, D) == -expected


def test_q_commute_index_matches_multiply():
    rng = random.Random(4)
    for _ in range(50):
        m = rng.randint(1, 4)
        D = tuple(rng.randint(1, 3) for _ in range(m))
        a = tuple(rng.randint(-3, 3) for _ in range(m))
        b = tuple(rng.randint(-3, 3) for _ in range(m))
        a2 = tuple(rng.randint(-3, 3) for _ in range(m))
        b2 = tuple(rng.randint(-3, 3) for _ in range(m))
        u = mono(m, D, a, b)
        v = mono(m, D, a2, b2)
        e = qtorus.q_commute_index((a, b), (a2, b2), D)
        assert u * v == (v * u).scale(coeff_qpow(e))


def test_is_unit_examples():
    D = (1, 1)
    u = mono(2, D, (1, 0), (0, 2), qexp=3, c=2)
    unit = u.as_unit()
    assert unit == qtorus.is_unit(u)
    assert unit is not None
    (a, b), c = unit
    assert a == (1, 0) and b == (0, 2) and c == {(3, ()): 2}
    x = mono(1, (1,), (1,), (0,))
    y = mono(1, (1,), (0,), (1,))
    assert (x + y).as_unit() is None
    assert QTorusElement.zero(1, (1,)).as_unit() is None


def test_unit_inverse_exact():
    rng = random.Random(17)
    for _ in range(30):
        m = rng.randint(1, 5)
        D = tuple(rng.randint(1, 3) for _ in range(m))
        a = tuple(rng.randint(-3, 3) for _ in range(m))
        b = tuple(rng.randint(-3, 3) for _ in range(m))
        u = mono(m, D, a, b, rng.randint(-3, 3), Fraction(rng.randint(1, 5), rng.randint(1, 5)))
        assert u * u.inverse() == QTorusElement.one(m, D)
        assert u.inverse() * u == QTorusElement.one(m, D)


def test_supports_and_multiplicity():
    D = (1,)
    u = mono(1, D, (0,), (1,)) + mono(1, D, (0,), (2,))
    assert u.supp_x() == {(0,)}
    assert u.multiplicity((0,)) == 2
    assert u.multiplicity((5,)) == 0
    unit = mono(1, D, (2,), (1,))
    assert unit.supp_x() == {(2,)} and unit.multiplicity((2,)) == 1


def test_powers():
    x = mono(1, (1,), (1,), (0,))
    y = mono(1, (1,), (0,), (1,))
    assert (x + y) ** 0 == QTorusElement.one(1, (1,))
    u = x * y
    assert u ** (-2) == (u.inverse()) ** 2
    with pytest.raises(ValueError):
        (x + y) ** (-1)


def test_center_basis_examples():
    assert sorted(qtorus.center_basis([[0, 0], [0, 0]])) == [[0, 1], [1, 0]]
    assert qtorus.center_basis([[0, 1], [-1, 0]]) == []
    H = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    basis = qtorus.center_basis(H)
    assert len(basis) == 1 and [abs(x) for x in basis[0]] == [0, 0, 1]
    with pytest.raises(qtorus.NotSkewSymmetric):
        qtorus.center_basis([[1, 0], [0, 1]])


def test_torus_decomposition_examples():
    assert qtorus.torus_decomposition([[0, 1], [-1, 0]]) == ([1], 0)
    assert qtorus.torus_decomposition([[0] * 3 for _ in range(3)]) == ([], 3)
    # H for the rank-one word (-1, 1), built from its string matrices
    H = [[0, 1, 1], [-1, 0, 2], [-1, -2, 0]]
    mult, center = qtorus.torus_decomposition(H)
    assert len(mult) == 1 and center == 1


def test_json_roundtrip_canonical():
    rng = random.Random(2)
    for _ in range(20):
        m = rng.randint(1, 4)
        D = tuple(rng.randint(1, 2) for _ in range(m))
        u = _random_element(rng, m, D, 4)
        v = QTorusElement.from_json(u.to_json())
        assert u == v
        terms = u.to_json()["terms"]
        keys = [(tuple(t["a"]), tuple(t["b"])) for t in terms]
        assert keys == sorted(keys)


def test_gamma_coefficients_multiply():
    c1 = {(0, (1, 0)): 1}
    c2 = {(0, (-1, 0)): 1}
    assert qtorus.coeff_mul(c1, c2) == {(0, ()): 1}
    c3 = qtorus.coeff_mul({(2, (1, 2)): 2}, {(1, (0, 1)): Fraction(1, 2)})
    assert c3 == {(3, (1, 3)): 1}
