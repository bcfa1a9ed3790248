"""Type-A wiring diagrams and images in tensor quantum tori.

A signed word gives one column per letter.  The column for letter e carries
a crossing between levels |e| and |e|+1 with a single traversable diagonal:
upward (|e| -> |e|+1) for positive letters, downward (|e|+1 -> |e|) for
negative letters.  Within the crossing column, staying on level |e| weighs
x, staying on level |e|+1 weighs x^{-1}, taking the diagonal weighs y, and
every other level weighs 1; column k writes its weight into tensor factor k.

The image of the generator x_ij is the sum of weights of paths from level i
to level j; the image of a quantum minor is the sum of weights of
vertex-disjoint path families (the quantum Lindstrom lemma), with the
permutation expansion of the minor kept alongside as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import weyl
from .qtorus import QTorusElement, coeff_qpow


class SizeMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class WiringDiagram:
    levels: int  # n + 1
    word: tuple

    def __post_init__(self):
        for e in self.word:
            if e == 0 or abs(e) >= self.levels:
                raise IndexError(f"letter {e} out of range for {self.levels} levels")

    @property
    def columns(self):
        """(crossing level, sign) per column."""
        return tuple((abs(e), 1 if e > 0 else -1) for e in self.word)


def build_diagram(n, word):
    return WiringDiagram(levels=n + 1, word=tuple(word))


def torus_diagonal(datum, word):
    """Diagonal of D_i~ for the word's tensor torus."""
    return tuple(datum.d[abs(e) - 1] for e in word)


def _column_moves(level, crossing, sign):
    """(next_level, (a, b)) options for one column, weight as exponent pair."""
    moves = []
    if level == crossing:
        moves.append((level, (1, 0)))  # stay on the crossing level: weight x
        if sign > 0:
            moves.append((level + 1, (0, 1)))  # upward diagonal: weight y
    elif level == crossing + 1:
        moves.append((level, (-1, 0)))  # stay above: weight x^{-1}
        if sign < 0:
            moves.append((level - 1, (0, 1)))  # downward diagonal: weight y
    else:
        moves.append((level, (0, 0)))
    return moves


def enumerate_paths(diagram, start, end):
    """All paths from level `start` to level `end`, as (m+1)-tuples of levels."""
    cols = diagram.columns
    out = []

    def rec(k, level, trace):
        if k == len(cols):
            if level == end:
                out.append(tuple(trace))
            return
        for nxt, _w in _column_moves(level, *cols[k]):
            trace.append(nxt)
            rec(k + 1, nxt, trace)
            trace.pop()

    rec(0, start, [start])
    return out


def path_weight(diagram, path, D):
    """I(p): the monomial with factor k given by the edge used in column k."""
    cols = diagram.columns
    a = []
    b = []
    for k, (crossing, sign) in enumerate(cols):
        lv, nxt = path[k], path[k + 1]
        for cand, w in _column_moves(lv, crossing, sign):
            if cand == nxt:
                a.append(w[0])
                b.append(w[1])
                break
        else:
            raise ValueError("path is not traversable in this diagram")
    return QTorusElement.monomial(len(cols), D, tuple(a), tuple(b))


def generator_image(datum, word, i, j):
    """Image of x_ij: the sum of path weights from level i to level j."""
    word = tuple(word)
    n = datum.n
    if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise IndexError(f"generator indices ({i},{j}) out of range 1..{n + 1}")
    diagram = build_diagram(n, word)
    D = torus_diagonal(datum, word)
    m = len(word)
    out = QTorusElement.zero(m, D)
    for path in enumerate_paths(diagram, i, j):
        out = out + path_weight(diagram, path, D)
    return out


def enumerate_families(diagram, A, B):
    """All vertex-disjoint path families from levels A to levels B.

    Paths are ordered by start level; a family is a tuple of level-trace
    tuples.  Vertex disjointness is equivalent to the traces being pairwise
    distinct at every column boundary.
    """
    A = sorted(set(A))
    B = sorted(set(B))
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} != |B| = {len(B)}")
    for lv in itertools.chain(A, B):
        if not 1 <= lv <= diagram.levels:
            raise IndexError(f"level {lv} out of range")
    cols = diagram.columns
    out = []
    target = tuple(B)

    def rec(k, levels, traces):
        if k == len(cols):
            if tuple(sorted(levels)) == target:
                out.append(tuple(tuple(tr) for tr in traces))
            return
        options = [_column_moves(lv, *cols[k]) for lv in levels]
        for choice in itertools.product(*options):
            nxt = tuple(c[0] for c in choice)
            if len(set(nxt)) != len(nxt):
                continue
            for tr, lv in zip(traces, nxt):
                tr.append(lv)
            rec(k + 1, nxt, traces)
            for tr in traces:
                tr.pop()

    rec(0, tuple(A), [[lv] for lv in A])
    return out


def family_weight(diagram, family, D):
    """I(P) = product of the path weights, taken in start-level order."""
    m = len(diagram.word)
    out = QTorusElement.one(m, D)
    for path in family:
        out = out * path_weight(diagram, path, D)
    return out


def minor_image(datum, word, A, B):
    """Image of the quantum minor with rows A and columns B, via the sum over
    vertex-disjoint path families."""
    word = tuple(word)
    diagram = build_diagram(datum.n, word)
    D = torus_diagonal(datum, word)
    out = QTorusElement.zero(len(word), D)
    for family in enumerate_families(diagram, A, B):
        out = out + family_weight(diagram, family, D)
    return out


def minor_image_oracle(datum, word, A, B):
    """Permutation expansion sum_tau (-q)^{l(tau)} prod_s pi(x_{a_s, b_tau(s)}):
    the independent check for minor_image."""
    word = tuple(word)
    A = sorted(set(A))
    B = sorted(set(B))
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} != |B| = {len(B)}")
    D = torus_diagonal(datum, word)
    m = len(word)
    gens = {}
    for i in A:
        for j in B:
            gens[(i, j)] = generator_image(datum, word, i, j)
    out = QTorusElement.zero(m, D)
    k = len(A)
    for tau in itertools.permutations(range(k)):
        inv = weyl.inversion_count(tau)
        term = QTorusElement.one(m, D).scale(coeff_qpow(inv, (-1) ** inv))
        for s in range(k):
            term = term * gens[(A[s], B[tau[s]])]
            if term.is_zero():
                break
        out = out + term
    return out


def quantum_determinant_image(datum, word):
    full = list(range(1, datum.n + 2))
    return minor_image(datum, word, full, full)


# ---------------------------------------------------------------------------
# expression grammar: expr := factor ("*" factor)*;
#                     factor := atom ("^" integer)?;
#                     atom := "x" digit digit | "minor(" digits "|" digits ")"


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "*^|()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit() or ch == "-":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if text[i:j] in ("-", ""):
                raise ParseError("bad integer", i)
            tokens.append(("int", text[i:j], i))
            i = j
        elif text[i : i + 5] == "minor":
            tokens.append(("minor", "minor", i))
            i += 5
        elif ch == "x":
            tokens.append(("x", "x", i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class GeneratorAtom:
    i: int
    j: int


@dataclass(frozen=True)
class MinorAtom:
    rows: tuple
    cols: tuple


@dataclass(frozen=True)
class ExprFactor:
    atom: object
    power: int


def parse_expression(text):
    """Parse the product grammar into a list of (atom, power) factors."""
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def take(kind):
        tok = tokens[pos[0]]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        pos[0] += 1
        return tok

    def atom():
        tok = peek()
        if tok[0] == "x":
            take("x")
            num = take("int")
            digits = num[1]
            if len(digits) != 2 or not digits.isdigit():
                raise ParseError("generator needs two digits, like x12", num[2])
            return GeneratorAtom(i=int(digits[0]), j=int(digits[1]))
        if tok[0] == "minor":
            take("minor")
            take("(")
            rows = take("int")
            if not rows[1].isdigit():
                raise ParseError("row list must be digits", rows[2])
            take("|")
            cols = take("int")
            if not cols[1].isdigit():
                raise ParseError("column list must be digits", cols[2])
            take(")")
            r = tuple(int(c) for c in rows[1])
            c = tuple(int(c) for c in cols[1])
            if len(set(r)) != len(r) or len(set(c)) != len(c):
                raise ParseError("repeated level in minor", rows[2])
            if len(r) != len(c):
                raise ParseError("minor needs equal row and column counts", rows[2])
            return MinorAtom(rows=r, cols=c)
        raise ParseError(f"expected an atom, found {tok[1]!r}", tok[2])

    def factor():
        a = atom()
        power = 1
        if peek()[0] == "^":
            take("^")
            tok = take("int")
            power = int(tok[1])
        return ExprFactor(atom=a, power=power)

    factors = [factor()]
    while peek()[0] == "*":
        take("*")
        factors.append(factor())
    take("end")
    return factors


def expression_image(datum, word, expr):
    """Image of a product expression: left-to-right product of factor images."""
    word = tuple(word)
    factors = parse_expression(expr) if isinstance(expr, str) else expr
    D = torus_diagonal(datum, word)
    out = QTorusElement.one(len(word), D)
    for f in factors:
        if isinstance(f.atom, GeneratorAtom):
            base = generator_image(datum, word, f.atom.i, f.atom.j)
        else:
            base = minor_image(datum, word, f.atom.rows, f.atom.cols)
        out = out * base**f.power
    return out


# ---------------------------------------------------------------------------
# homomorphism verification


def verify_relations(datum, word):
    """Check the quantum-matrix relations and det_q = 1 on the generator
    images; returns a list of (description, ok) pairs."""
    word = tuple(word)
    n1 = datum.n + 1
    D = torus_diagonal(datum, word)
    q = coeff_qpow(1)
    g = {
        (i, j): generator_image(datum, word, i, j)
        for i in range(1, n1 + 1)
        for j in range(1, n1 + 1)
    }
    report = []
    for i in range(1, n1 + 1):
        for j in range(1, n1 + 1):
            for l in range(j + 1, n1 + 1):
                ok = g[(i, j)] * g[(i, l)] == (g[(i, l)] * g[(i, j)]).scale(q)
                report.append((f"x{i}{j} x{i}{l} = q x{i}{l} x{i}{j}", ok))
            for k in range(i + 1, n1 + 1):
                ok = g[(i, j)] * g[(k, j)] == (g[(k, j)] * g[(i, j)]).scale(q)
                report.append((f"x{i}{j} x{k}{j} = q x{k}{j} x{i}{j}", ok))
    for i in range(1, n1 + 1):
        for k in range(i + 1, n1 + 1):
            for j in range(1, n1 + 1):
                for l in range(j + 1, n1 + 1):
                    ok = g[(i, l)] * g[(k, j)] == g[(k, j)] * g[(i, l)]
                    report.append((f"x{i}{l} x{k}{j} = x{k}{j} x{i}{l}", ok))
                    lhs = g[(i, j)] * g[(k, l)] - g[(k, l)] * g[(i, j)]
                    rhs = (g[(i, l)] * g[(k, j)]).scale(coeff_qpow(1)) - (
                        g[(i, l)] * g[(k, j)]
                    ).scale(coeff_qpow(-1))
                    report.append(
                        (f"[x{i}{j}, x{k}{l}] = (q-1/q) x{i}{l} x{k}{j}", lhs == rhs)
                    )
    det = quantum_determinant_image(datum, word)
    report.append(("det_q = 1", det == QTorusElement.one(len(word), D)))
    return report


def restrict_last_column(datum, word, i, j):
    """The recursion step for deleting the last column: expresses the image on
    the full word through images on the truncated word."""
    word = tuple(word)
    if not word:
        raise ValueError("word must be nonempty")
    short = word[:-1]
    e = word[-1]
    c = abs(e)
    D = torus_diagonal(datum, word)
    m = len(word)

    def extend(elem, a_last, b_last):
        out = QTorusElement.zero(m, D)
        for (a, b), coeff in elem.terms.items():
            out = out + QTorusElement.monomial(m, D, a + (a_last,), b + (b_last,), coeff)
        return out

    if e > 0:
        # positive letter: paths may enter level c+1 through the diagonal
        if j == c:
            return extend(generator_image(datum, short, i, j), 1, 0)
        if j == c + 1:
            return extend(generator_image(datum, short, i, j), -1, 0) + extend(
                generator_image(datum, short, i, j - 1), 0, 1
            )
        return extend(generator_image(datum, short, i, j), 0, 0)
    if j == c + 1:
        return extend(generator_image(datum, short, i, j), -1, 0)
    if j == c:
        return extend(generator_image(datum, short, i, j), 1, 0) + extend(
            generator_image(datum, short, i, j + 1), 0, 1
        )
    return extend(generator_image(datum, short, i, j), 0, 0)


# ---------------------------------------------------------------------------
# rendering


def render_ascii(diagram):
    """One 3-character cell per column and level; crossings show the
    traversable diagonal."""
    rows = []
    for level in range(diagram.levels, 0, -1):
        cells = []
        for crossing, sign in diagram.columns:
            if level == crossing + 1:
                cells.append("_/~" if sign > 0 else "~\\_")
            elif level == crossing:
                cells.append("~/_" if sign > 0 else "_\\~")
            else:
                cells.append("---")
        rows.append(f"{level:>2} " + " ".join(cells) + f" {level}")
    return "\n".join(rows)


def render_svg(diagram, cell=40, margin=20):
    """Minimal SVG rendering: horizontal wires plus one diagonal per column."""
    m = len(diagram.word)
    n1 = diagram.levels
    width = 2 * margin + cell * max(m, 1)
    height = 2 * margin + cell * (n1 - 1)

    def ycoord(level):
        return margin + cell * (n1 - level)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
    ]
    for level in range(1, n1 + 1):
        y = ycoord(level)
        parts.append(
            f'<line x1="{margin}" y1="{y}" x2="{width - margin}" y2="{y}" stroke="black"/>'
        )
        parts.append(
            f'<text x="4" y="{y + 4}" font-size="12">{level}</text>'
        )
    for k, (crossing, sign) in enumerate(diagram.columns):
        x1 = margin + cell * k
        x2 = x1 + cell
        if sign > 0:
            y1, y2 = ycoord(crossing), ycoord(crossing + 1)
        else:
            y1, y2 = ycoord(crossing + 1), ycoord(crossing)
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{(x1 + x2) // 2}" y="{(y1 + y2) // 2}" font-size="10">y</text>'
        )
    parts.append("</svg>")
    return "".join(parts)
