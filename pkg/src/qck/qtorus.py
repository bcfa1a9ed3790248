"""Exact arithmetic in tensor quantum tori.

Elements are finite sums of normal-ordered monomials x^a y^b with a, b in
Z^m, where factor k satisfies x_k y_k = q^{d_k} y_k x_k.  Coefficients are
Laurent polynomials in q over Q, optionally carrying monomials in formal
parameters gamma_1, gamma_2, ...; they are stored as dicts mapping
(q_exponent, gamma_exponent_tuple) to exact rationals (Python ints or
Fractions).
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import intlinalg
from .intlinalg import NotSkewSymmetric


class ShapeMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficients: {(q_exp, gamma_tuple): rational}


def coeff_one():
    return {(0, ()): 1}


def coeff_qpow(e, mult=1):
    return {(e, ()): mult} if mult else {}


def coeff_scalar(value, qexp=0, gamma=()):
    value = value if isinstance(value, (int, Fraction)) else Fraction(value)
    gamma = tuple(gamma)
    if not any(gamma):
        gamma = ()
    return {(qexp, gamma): value} if value else {}


def coeff_add(c1, c2):
    out = dict(c1)
    for key, v in c2.items():
        nv = out.get(key, 0) + v
        if nv:
            out[key] = nv
        elif key in out:
            del out[key]
    return out


def coeff_neg(c):
    return {k: -v for k, v in c.items()}


def coeff_mul(c1, c2):
    out = {}
    for (e1, g1), v1 in c1.items():
        for (e2, g2), v2 in c2.items():
            if g1 and g2:
                g = tuple(a + b for a, b in zip(g1, g2))
                if not any(g):
                    g = ()
            else:
                g = g1 or g2
            key = (e1 + e2, g)
            nv = out.get(key, 0) + v1 * v2
            if nv:
                out[key] = nv
            elif key in out:
                del out[key]
    return out


def coeff_shift(c, qshift):
    if qshift == 0:
        return dict(c)
    return {(e + qshift, g): v for (e, g), v in c.items()}


def coeff_is_zero(c):
    return not c


def coeff_invert(c):
    """Inverse of an invertible coefficient (a single q-gamma monomial)."""
    if len(c) != 1:
        raise ValueError("coefficient is not a monomial, cannot invert")
    ((e, g), v), = c.items()
    return {(-e, tuple(-x for x in g)): Fraction(1, 1) / v}


def coeff_eq(c1, c2):
    return coeff_is_zero(coeff_add(c1, coeff_neg(c2)))


def coeff_to_json(c):
    items = sorted(c.items(), key=lambda kv: (kv[0][0], kv[0][1]))
    out = []
    for (e, g), v in items:
        f = Fraction(v)
        out.append({"q": e, "gamma": list(g), "num": f.numerator, "den": f.denominator})
    return out


def coeff_from_json(data):
    c = {}
    for item in data:
        v = Fraction(item["num"], item["den"])
        if v.denominator == 1:
            v = v.numerator
        gamma = tuple(item["gamma"])
        if not any(gamma):
            gamma = ()
        key = (item["q"], gamma)
        if v:
            c[key] = v
    return c


def coeff_str(c):
    if not c:
        return "0"
    parts = []
    for (e, g), v in sorted(c.items()):
        s = str(v)
        if e:
            s += f"*q^{e}" if e != 1 else "*q"
        for i, gi in enumerate(g):
            if gi:
                s += f"*g{i + 1}^{gi}" if gi != 1 else f"*g{i + 1}"
        parts.append(s)
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# elements


class QTorusElement:
    """Finite sum of normal-ordered monomials in the tensor quantum torus
    with commutation x_k y_k = q^{d_k} y_k x_k per factor.

    terms maps (a, b) pairs of integer tuples to coefficient dicts; zero
    coefficients are never stored.
    """

    __slots__ = ("m", "D", "terms")

    def __init__(self, m, D, terms=None):
        self.m = m
        self.D = tuple(D)
        if len(self.D) != m:
            raise ShapeMismatch("diagonal length != factor count")
        self.terms = {}
        if terms:
            for (a, b), c in terms.items():
                if len(a) != m or len(b) != m:
                    raise ShapeMismatch("monomial length != factor count")
                if not coeff_is_zero(c):
                    self.terms[(tuple(a), tuple(b))] = dict(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, m, D):
        return cls(m, D)

    @classmethod
    def one(cls, m, D):
        return cls.monomial(m, D, (0,) * m, (0,) * m)

    @classmethod
    def monomial(cls, m, D, a, b, coeff=None):
        return cls(m, D, {(tuple(a), tuple(b)): coeff if coeff is not None else coeff_one()})

    # -- ring structure -----------------------------------------------------

    def _check_compatible(self, other):
        if self.m != other.m or self.D != other.D:
            raise ShapeMismatch("elements live in different tori")

    def __add__(self, other):
        self._check_compatible(other)
        terms = {k: dict(c) for k, c in self.terms.items()}
        for k, c in other.terms.items():
            merged = coeff_add(terms.get(k, {}), c)
            if merged:
                terms[k] = merged
            elif k in terms:
                del terms[k]
        out = QTorusElement(self.m, self.D)
        out.terms = terms
        return out

    def __neg__(self):
        out = QTorusElement(self.m, self.D)
        out.terms = {k: coeff_neg(c) for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product with normal ordering: on monomials
        (x^a y^b)(x^a' y^b') = q^{-b^T D a'} x^{a+a'} y^{b+b'}."""
        self._check_compatible(other)
        D = self.D
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                shift = -sum(b * d * a for b, d, a in zip(b1, D, a2))
                key = (
                    tuple(x + y for x, y in zip(a1, a2)),
                    tuple(x + y for x, y in zip(b1, b2)),
                )
                c = coeff_shift(coeff_mul(c1, c2), shift)
                merged = coeff_add(terms.get(key, {}), c)
                if merged:
                    terms[key] = merged
                elif key in terms:
                    del terms[key]
        out = QTorusElement(self.m, self.D)
        out.terms = terms
        return out

    def scale(self, coeff):
        out = QTorusElement(self.m, self.D)
        for k, c in self.terms.items():
            nc = coeff_mul(c, coeff)
            if nc:
                out.terms[k] = nc
        return out

    def qpow_times(self, e):
        return self.scale(coeff_qpow(e))

    def __pow__(self, k):
        if k < 0:
            unit = self.as_unit()
            if unit is None:
                raise ValueError("negative power of a non-unit element")
            return self.inverse() ** (-k)
        out = QTorusElement.one(self.m, self.D)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, QTorusElement):
            return NotImplemented
        if self.m != other.m or self.D != other.D:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(coeff_eq(self.terms[k], other.terms[k]) for k in self.terms)

    def __hash__(self):
        raise TypeError("QTorusElement is unhashable")

    def is_zero(self):
        return not self.terms

    # -- units, supports ----------------------------------------------------

    def as_unit(self):
        """The ((a, b), coeff) of a one-term element with monomial invertible
        coefficient, else None."""
        if len(self.terms) != 1:
            return None
        ((key, c),) = self.terms.items()
        if len(c) != 1:
            return None
        return key, dict(c)

    def inverse(self):
        """Inverse of a unit; raises for non-units."""
        unit = self.as_unit()
        if unit is None:
            raise ValueError("element is not a unit")
        (a, b), c = unit
        # (x^a y^b)^{-1} = q^{-b^T D a} x^{-a} y^{-b}
        shift = -sum(x * d * y for x, y, d in zip(b, a, self.D))
        inv_a = tuple(-x for x in a)
        inv_b = tuple(-x for x in b)
        coeff = coeff_shift(coeff_invert(c), shift)
        return QTorusElement.monomial(self.m, self.D, inv_a, inv_b, coeff)

    def supp(self):
        return set(self.terms.keys())

    def supp_x(self):
        return {a for (a, _b) in self.terms.keys()}

    def multiplicity(self, a):
        a = tuple(a)
        return sum(1 for (aa, _bb) in self.terms.keys() if aa == a)

    # -- serialization ------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def to_json(self):
        return {
            "m": self.m,
            "D": list(self.D),
            "terms": [
                {"a": list(a), "b": list(b), "coeff": coeff_to_json(c)}
                for (a, b), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            terms[(tuple(t["a"]), tuple(t["b"]))] = coeff_from_json(t["coeff"])
        return cls(data["m"], tuple(data["D"]), terms)

    def dumps(self):
        return json.dumps(self.to_json())

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = []
            for k in range(self.m):
                piece = ""
                if a[k]:
                    piece += f"x{k + 1}^{a[k]}" if a[k] != 1 else f"x{k + 1}"
                if b[k]:
                    piece += f"y{k + 1}^{b[k]}" if b[k] != 1 else f"y{k + 1}"
                mono.append(piece or "1")
            cs = coeff_str(c)
            pre = "" if cs == "1" else f"({cs})*"
            parts.append(pre + "(" + " | ".join(mono) + ")")
        return " + ".join(parts)


def is_unit(u):
    """((a, b), coeff) when u is a unit (one term, invertible coefficient),
    else None.  Alias for QTorusElement.as_unit."""
    return u.as_unit()


def q_commute_index(mono_u, mono_v, D):
    """Exponent e with u v = q^e v u for monomials u = x^a y^b, v = x^a' y^b':
    e = a^T D b' - a'^T D b."""
    a, b = mono_u
    a2, b2 = mono_v
    return sum(x * d * y for x, d, y in zip(a, D, b2)) - sum(
        x * d * y for x, d, y in zip(a2, D, b)
    )


def center_basis(H):
    """Z-basis of the exponent lattice of the center: {v : H v = 0}."""
    if not intlinalg.is_skew_symmetric(H):
        raise NotSkewSymmetric("commutation matrix is not skew-symmetric")
    return intlinalg.kernel_basis(H)


def torus_decomposition(H):
    """(multipliers, center_dim) of the quantum torus with commutation matrix
    H: the torus splits as a tensor product of 2-generator tori L_{q^{m_i}}(2)
    and a central Laurent-polynomial algebra of rank size - rank(H)."""
    nf = intlinalg.skew_normal_form(H)
    return list(nf.multipliers), nf.zero_dim
