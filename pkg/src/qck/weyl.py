"""Root data, integral weights, and double-word bookkeeping.

Weights are plain integer tuples over the fundamental-weight basis, so the
pairing (mu, alpha_i^vee) is just the i-th coordinate.  Words are tuples of
indices in [1, n]; signed double words use negative entries for the first
Weyl factor and positive entries for the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg


class NonReducedWord(ValueError):
    """A word that should be reduced is not; carries the offending factor."""


@dataclass(frozen=True)
class RootDatum:
    """Symmetrizable Cartan datum: matrix c_ij = (alpha_i^vee, alpha_j) and
    symmetrizers d_i = (alpha_i, alpha_i)/2."""

    n: int
    cartan: tuple
    d: tuple

    def __post_init__(self):
        n = self.n
        if n <= 0 or len(self.cartan) != n or any(len(r) != n for r in self.cartan):
            raise ValueError("bad Cartan matrix shape")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            if self.d[i] <= 0:
                raise ValueError("symmetrizers must be positive")
            for j in range(n):
                if i != j and self.cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if self.d[i] * self.cartan[i][j] != self.d[j] * self.cartan[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable")

    @property
    def is_type_a(self):
        return self.d == (1,) * self.n and all(
            self.cartan[i][j] == (2 if i == j else (-1 if abs(i - j) == 1 else 0))
            for i in range(self.n)
            for j in range(self.n)
        )

    def simple_root(self, i):
        """alpha_i in the omega-basis: column i of the Cartan matrix."""
        self._check_index(i)
        return tuple(self.cartan[k][i - 1] for k in range(self.n))

    def sym(self, i, j):
        """(alpha_i, alpha_j) = d_i c_ij."""
        return self.d[i - 1] * self.cartan[i - 1][j - 1]

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"node index {i} out of range 1..{self.n}")


def type_a(n):
    cartan = tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )
    return RootDatum(n=n, cartan=cartan, d=(1,) * n)


def zero_weight(datum):
    return (0,) * datum.n


def fundamental_weight(datum, i):
    datum._check_index(i)
    return tuple(1 if k == i - 1 else 0 for k in range(datum.n))


def pairing(mu, i):
    """(mu, alpha_i^vee) for a weight in omega-coordinates."""
    return mu[i - 1]


def reflect(datum, i, mu):
    """Simple reflection s_i(mu) = mu - (mu, alpha_i^vee) alpha_i."""
    datum._check_index(i)
    c = mu[i - 1]
    if c == 0:
        return tuple(mu)
    alpha = datum.simple_root(i)
    return tuple(m - c * a for m, a in zip(mu, alpha))


def apply_word(datum, word, mu):
    """s_{i_1} s_{i_2} ... s_{i_m} (mu), applied right to left."""
    for i in reversed(word):
        mu = reflect(datum, i, mu)
    return mu


def weyl_matrix(datum, word):
    """Matrix of the word's Weyl product on the weight lattice; column j holds
    the omega-coordinates of w(omega_j)."""
    n = datum.n
    cols = [apply_word(datum, word, fundamental_weight(datum, j)) for j in range(1, n + 1)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _root_coords_reflect(datum, i, coords):
    # s_i acting on root-lattice coordinates (alpha-basis)
    pair = sum(datum.cartan[i - 1][j] * coords[j] for j in range(datum.n))
    out = list(coords)
    out[i - 1] -= pair
    return tuple(out)


def is_reduced(datum, word):
    """True iff the word is a reduced expression for its Weyl product.

    Type A uses inversion counting on the underlying permutation; general
    Cartan data use the positive-root descent criterion (the word is reduced
    iff no prefix sends the next simple root negative).
    """
    word = tuple(word)
    for i in word:
        datum._check_index(i)
    if datum.is_type_a:
        perm = word_to_permutation(datum, word)
        return inversion_count(perm) == len(word)
    # track beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}); reduced iff all positive
    for k in range(len(word)):
        coords = tuple(1 if j == word[k] - 1 else 0 for j in range(datum.n))
        for t in range(k - 1, -1, -1):
            coords = _root_coords_reflect(datum, word[t], coords)
        if all(c <= 0 for c in coords):
            return False
    return True


def word_to_permutation(datum, word):
    """Permutation of [1, n+1] for a type-A word (one-line notation).

    The adjacent transposition s_i = (i, i+1) acts on positions; the product
    follows the same convention as apply_word.
    """
    n = datum.n
    perm = list(range(1, n + 2))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def inversion_count(perm):
    return sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )


def split_double_word(datum, word):
    """Split a signed double word into (w1_word, w2_word, supp).

    Negative entries, in order, give a reduced word for w1; positive entries
    give one for w2.  Raises NonReducedWord naming the offending factor.
    """
    word = tuple(word)
    for e in word:
        if e == 0 or abs(e) > datum.n:
            raise IndexError(f"letter {e} out of range for rank {datum.n}")
    w1 = tuple(-e for e in word if e < 0)
    w2 = tuple(e for e in word if e > 0)
    if not is_reduced(datum, w1):
        raise NonReducedWord(f"negative letters {w1} are not reduced (w1 factor)")
    if not is_reduced(datum, w2):
        raise NonReducedWord(f"positive letters {w2} are not reduced (w2 factor)")
    supp = frozenset(abs(e) for e in word)
    return w1, w2, supp


def ker_rank(datum, w1_word, w2_word):
    """dim ker(w1 - w2) on the weight lattice, over Q."""
    m1 = weyl_matrix(datum, w1_word)
    m2 = weyl_matrix(datum, w2_word)
    diff = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(m1, m2)]
    return datum.n - intlinalg.rank_over_Q(diff)


def natural_weight(datum, j):
    """Weight of the j-th basis vector of the natural module in type A_n:
    omega_j - omega_{j-1}, with omega_0 = omega_{n+1} = 0."""
    n = datum.n
    if not 1 <= j <= n + 1:
        raise IndexError(f"natural-module index {j} out of range 1..{n + 1}")
    mu = [0] * n
    if j <= n:
        mu[j - 1] += 1
    if j >= 2:
        mu[j - 2] -= 1
    return tuple(mu)


def weight_gram(datum):
    """Gram matrix (omega_i, omega_j) of the fundamental weights, rational."""
    cinv = intlinalg.invert_rational([list(r) for r in datum.cartan])
    n = datum.n
    return [[Fraction(datum.d[i]) * cinv[i][j] for j in range(n)] for i in range(n)]


def parse_word(text):
    """Parse a comma-separated signed word such as '1,2,1,-1,-2'."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def format_word(word):
    return ",".join(str(e) for e in word)


def all_reduced_words(datum, max_len):
    """All reduced words of length <= max_len, grouped by length (exhaustive)."""
    out = [[()]]
    for _ in range(max_len):
        nxt = []
        for w in out[-1]:
            for i in range(1, datum.n + 1):
                cand = w + (i,)
                if is_reduced(datum, cand):
                    nxt.append(cand)
        out.append(nxt)
    return out


def all_double_words(datum, max_len):
    """All valid signed double words of length <= max_len (exhaustive)."""
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for e in list(range(-datum.n, 0)) + list(range(1, datum.n + 1)):
                cand = w + (e,)
                try:
                    split_double_word(datum, cand)
                except NonReducedWord:
                    continue
                nxt.append(cand)
        words.extend(nxt)
        frontier = nxt
    return words
