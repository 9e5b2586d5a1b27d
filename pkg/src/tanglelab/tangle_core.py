"""Tangle diagrams, Conway algebraic expressions, braid words, and the
compilers between them.

Conventions (fixed once, everything downstream depends on them):

* A compiled n-tangle has 2n boundary points listed counterclockwise,
  positions 1..n running down the left side and n+1..2n up the right
  side.  For a 2-tangle this is x1 = NW, x2 = SW, x3 = SE, x4 = NE.
* The 0-tangle is two horizontal strands (x1-x4, x2-x3); the infinity
  tangle is two vertical strands (x1-x2, x3-x4).
* A positive twist crossing has the SW-NE strand on top, so the twist
  tangle with k crossings satisfies the usual coloring relations
  x4 - x1 = k (x2 - x1), x3 = x2 + x4 - x1.
* `Rot` is the counterclockwise quarter turn: corner lists rotate one
  step, and slopes transform by s -> -1/s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .errors import ConwaySyntaxError, NotRationalError

__all__ = [
    "Frac",
    "INF",
    "Crossing",
    "TangleDiagram",
    "Integer",
    "Infinity",
    "Rot",
    "Compose",
    "Rational",
    "Planar",
    "Sigma",
    "rotate",
    "compose",
    "parse_conway",
    "print_conway",
    "compile_expr",
    "slope",
    "rational_expr",
    "cf_vector",
    "cf_eval",
    "BraidWord",
    "parse_braid",
    "braid_closure",
    "closure",
    "parse_diagram_text",
    "diagram_to_text",
    "noncrossing_matchings",
    "random_algebraic_expr",
    "pretzel",
    "trefoil",
    "figure_eight",
    "borromean_rings",
    "trivial_link",
]


# ---------------------------------------------------------------------------
# Exact fractions with a single point at infinity (1, 0).


@dataclass(frozen=True)
class Frac:
    """Reduced fraction num/den with den >= 0; (1, 0) is infinity."""

    num: int
    den: int

    @staticmethod
    def make(num, den=1):
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not a tangle slope")
            return Frac(1, 0)
        if den < 0:
            num, den = -num, -den
        g = gcd(abs(num), den)
        if g > 1:
            num, den = num // g, den // g
        return Frac(num, den)

    @property
    def is_inf(self):
        return self.den == 0

    @property
    def is_integer(self):
        return self.den == 1

    def recip(self):
        return Frac.make(self.den, self.num)

    def add_int(self, k):
        return Frac.make(self.num + k * self.den, self.den)

    def neg(self):
        return Frac.make(-self.num, self.den)

    def rot(self):
        """Slope of the rotated tangle: s -> -1/s."""
        return Frac.make(-self.den, self.num)

    def add(self, other):
        if self.is_inf or other.is_inf:
            return INF
        return Frac.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def sub(self, other):
        return self.add(other.neg())

    def __str__(self):
        if self.is_inf:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INF = Frac(1, 0)


# ---------------------------------------------------------------------------
# Diagrams.


@dataclass(frozen=True)
class Crossing:
    """One crossing: the over arc and the two under arcs.

    `sign` is the braid-orientation tag (+1/-1) when the diagram came
    from a braid word; plain tangle compilation leaves it None.
    """

    over: int
    under_in: int
    under_out: int
    sign: int | None = None


@dataclass(frozen=True)
class TangleDiagram:
    arcs: frozenset
    crossings: tuple
    boundary: tuple
    closed_components: int

    @property
    def n(self):
        return len(self.boundary) // 2

    def validate(self):
        if len(self.boundary) % 2:
            raise ValueError("boundary length must be even")
        for c in self.crossings:
            for a in (c.over, c.under_in, c.under_out):
                if a not in self.arcs:
                    raise ValueError(f"crossing references unknown arc {a}")
        counts = {}
        for a in self.boundary:
            if a not in self.arcs:
                raise ValueError(f"boundary references unknown arc {a}")
            counts[a] = counts.get(a, 0) + 1
        if any(v > 2 for v in counts.values()):
            raise ValueError("an arc carries more than two boundary endpoints")
        if self.closed_components < 0:
            raise ValueError("negative closed component count")
        return self


# ---------------------------------------------------------------------------
# Expressions.


@dataclass(frozen=True)
class Integer:
    k: int


@dataclass(frozen=True)
class Infinity:
    pass


@dataclass(frozen=True)
class Rot:
    child: object


@dataclass(frozen=True)
class Compose:
    left: object
    right: object


@dataclass(frozen=True)
class Rational:
    """Sugar for the standard alternating twist construction; the last
    entry is always a horizontal twist region."""

    entries: tuple

    def __init__(self, *entries):
        if len(entries) == 1 and isinstance(entries[0], (tuple, list)):
            entries = tuple(entries[0])
        if not entries:
            raise ValueError("Rational needs at least one entry")
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))


@dataclass(frozen=True)
class Planar:
    """Crossingless n-tangle: a non-crossing perfect matching of the 2n
    boundary points (1-indexed pairs)."""

    pairs: tuple

    def __init__(self, pairs):
        pairs = tuple(tuple(sorted(p)) for p in pairs)
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))
        seen = [q for p in self.pairs for q in p]
        m = len(seen)
        if sorted(seen) != list(range(1, m + 1)):
            raise ValueError("pairs must partition 1..2n")


@dataclass(frozen=True)
class Sigma:
    """One-crossing n-tangle: levels i and i+1 cross once; sign +1 puts
    the strand entering at level i+1 on top (matching Integer(+1) at
    n = 2, i = 1)."""

    n: int
    i: int
    sign: int

    def __post_init__(self):
        if not (1 <= self.i < self.n):
            raise ValueError("crossing level out of range")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def rotate(expr):
    return Rot(expr)


def compose(a, b):
    return Compose(a, b)


def expr_width(expr):
    """Number of strands n of the compiled tangle (2 for Conway forms)."""
    if isinstance(expr, (Integer, Infinity, Rational)):
        return 2
    if isinstance(expr, Planar):
        return len(expr.pairs)
    if isinstance(expr, Sigma):
        return expr.n
    if isinstance(expr, Rot):
        return expr_width(expr.child)
    if isinstance(expr, Compose):
        nl, nr = expr_width(expr.left), expr_width(expr.right)
        if nl != nr:
            raise ValueError("composed tangles must have equal widths")
        return nl
    raise TypeError(f"not a tangle expression: {expr!r}")


# ---------------------------------------------------------------------------
# Conway notation parser and printer.

_TOKEN = re.compile(r"\s*(-?\d+|inf|[rT()*,])")
_MAX_INT = 2**31


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ConwaySyntaxError(f"unexpected character {stripped[0]!r}", pos)
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def next(self):
        if self.i >= len(self.tokens):
            raise ConwaySyntaxError("unexpected end of input", len(self.text))
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, want):
        tok, pos = self.next()
        if tok != want:
            raise ConwaySyntaxError(f"expected {want!r}, found {tok!r}", pos)

    def parse_int(self):
        tok, pos = self.next()
        try:
            val = int(tok)
        except ValueError:
            raise ConwaySyntaxError(f"expected integer, found {tok!r}", pos) from None
        if abs(val) >= _MAX_INT:
            raise ConwaySyntaxError("integer literal too large", pos)
        return val

    def parse_expr(self):
        tok, pos = self.next()
        if tok == "inf":
            return Infinity()
        if tok == "r":
            self.expect("(")
            inner = self.parse_expr()
            self.expect(")")
            return Rot(inner)
        if tok == "(":
            left = self.parse_expr()
            self.expect("*")
            right = self.parse_expr()
            self.expect(")")
            return Compose(left, right)
        if tok == "T":
            self.expect("(")
            entries = [self.parse_int()]
            while self.peek() == ",":
                self.next()
                entries.append(self.parse_int())
            self.expect(")")
            return Rational(*entries)
        try:
            val = int(tok)
        except ValueError:
            raise ConwaySyntaxError(f"unexpected token {tok!r}", pos) from None
        if abs(val) >= _MAX_INT:
            raise ConwaySyntaxError("integer literal too large", pos)
        return Integer(val)


def parse_conway(text):
    """Parse Conway notation:
    expr := INT | "inf" | "r(" expr ")" | "(" expr "*" expr ")"
          | "T(" INT ("," INT)* ")"
    """
    parser = _Parser(_tokenize(text), text)
    expr = parser.parse_expr()
    if parser.i != len(parser.tokens):
        tok, pos = parser.tokens[parser.i]
        raise ConwaySyntaxError(f"trailing input {tok!r}", pos)
    return expr


def print_conway(expr):
    if isinstance(expr, Integer):
        return str(expr.k)
    if isinstance(expr, Infinity):
        return "inf"
    if isinstance(expr, Rot):
        return f"r({print_conway(expr.child)})"
    if isinstance(expr, Compose):
        return f"({print_conway(expr.left)}*{print_conway(expr.right)})"
    if isinstance(expr, Rational):
        return "T(" + ",".join(str(e) for e in expr.entries) + ")"
    if isinstance(expr, Planar):
        return "M[" + ";".join(f"{a}-{b}" for a, b in expr.pairs) + "]"
    if isinstance(expr, Sigma):
        return f"S[{expr.n},{expr.i},{expr.sign:+d}]"
    raise TypeError(f"not a tangle expression: {expr!r}")


# ---------------------------------------------------------------------------
# The compiler: expression trees to diagrams via a gluing builder.


class _Builder:
    """Union-find arc store shared by all fragments of one compilation."""

    def __init__(self):
        self.parent = []
        self.ends = []  # open boundary endpoints per root
        self.touched = []  # referenced by some crossing
        self.crossings = []
        self.circles = 0

    def new_arc(self, ends):
        i = len(self.parent)
        self.parent.append(i)
        self.ends.append(ends)
        self.touched.append(False)
        return i

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def add_crossing(self, over, under_in, under_out, sign=None):
        over = self.find(over)
        under_in = self.find(under_in)
        under_out = self.find(under_out)
        self.crossings.append([over, under_in, under_out, sign])
        for a in (over, under_in, under_out):
            self.touched[a] = True

    def glue(self, a, b):
        """Join one open end of arc a with one open end of arc b."""
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[b] = a
            self.ends[a] = self.ends[a] + self.ends[b] - 2
            self.touched[a] = self.touched[a] or self.touched[b]
        else:
            self.ends[a] -= 2
            if self.ends[a] == 0 and not self.touched[a]:
                # a crossing-free circle: count it and forget the arc
                self.circles += 1
                self.ends[a] = -1  # mark dead
        if self.ends[self.find(a)] < -1:
            raise AssertionError("gluing consumed more ends than available")

    def finish(self, corners):
        corners = [self.find(c) for c in corners]
        for rec in self.crossings:
            rec[0], rec[1], rec[2] = self.find(rec[0]), self.find(rec[1]), self.find(rec[2])
        # deterministic compact relabeling: crossings first, then boundary
        order = []
        seen = set()
        for rec in self.crossings:
            for a in rec[:3]:
                if a not in seen:
                    seen.add(a)
                    order.append(a)
        for a in corners:
            if a not in seen:
                seen.add(a)
                order.append(a)
        relabel = {a: i for i, a in enumerate(order)}
        crossings = tuple(
            Crossing(relabel[o], relabel[ui], relabel[uo], s)
            for o, ui, uo, s in self.crossings
        )
        boundary = tuple(relabel[c] for c in corners)
        return TangleDiagram(
            frozenset(range(len(order))), crossings, boundary, self.circles
        ).validate()


def _build_planar(b, pairs):
    width2 = 2 * len(pairs)
    corners = [None] * width2
    for i, j in pairs:
        a = b.new_arc(2)
        corners[i - 1] = a
        corners[j - 1] = a
    return corners


def _build_sigma(b, n, level, sign):
    corners = [None] * (2 * n)
    for ell in range(1, n + 1):
        if ell in (level, level + 1):
            continue
        a = b.new_arc(2)
        corners[ell - 1] = a
        corners[2 * n - ell] = a
    over = b.new_arc(2)
    u_in = b.new_arc(1)
    u_out = b.new_arc(1)
    if sign > 0:
        # strand entering at level i+1 is on top: runs to right level i
        corners[level] = over
        corners[2 * n - level] = over
        corners[level - 1] = u_in
        corners[2 * n - level - 1] = u_out
    else:
        corners[level - 1] = over
        corners[2 * n - level - 1] = over
        corners[level] = u_in
        corners[2 * n - level] = u_out
    b.add_crossing(over, u_in, u_out)
    return corners


def _glue_compose(b, left, right):
    n = len(left) // 2
    for k in range(n):
        b.glue(left[2 * n - 1 - k], right[k])
    return [b.find(c) for c in left[:n]] + [b.find(c) for c in right[n:]]


def _build(b, expr):
    if isinstance(expr, Integer):
        corners = _build_planar(b, ((1, 4), (2, 3)))
        s = 1 if expr.k > 0 else -1
        for _ in range(abs(expr.k)):
            corners = _glue_compose(b, corners, _build_sigma(b, 2, 1, s))
        return corners
    if isinstance(expr, Infinity):
        return _build_planar(b, ((1, 2), (3, 4)))
    if isinstance(expr, Planar):
        return _build_planar(b, expr.pairs)
    if isinstance(expr, Sigma):
        return _build_sigma(b, expr.n, expr.i, expr.sign)
    if isinstance(expr, Rational):
        return _build(b, rational_expr(expr.entries))
    if isinstance(expr, Rot):
        corners = _build(b, expr.child)
        return [corners[-1]] + corners[:-1]
    if isinstance(expr, Compose):
        left = _build(b, expr.left)
        right = _build(b, expr.right)
        if len(left) != len(right):
            raise ValueError("composed tangles must have equal widths")
        return _glue_compose(b, left, right)
    raise TypeError(f"not a tangle expression: {expr!r}")


def compile_expr(expr):
    """Compile an expression tree to a TangleDiagram."""
    b = _Builder()
    corners = _build(b, expr)
    return b.finish(corners)


# ---------------------------------------------------------------------------
# Rational tangles: expansion, evaluation, slopes.


def rational_expr(entries):
    """Expand a twist vector into Rot/Compose/Integer nodes.

    Entries alternate horizontal/vertical twist regions from the inside
    out; the outermost entry is horizontal, so the innermost one is
    horizontal iff the vector length is odd.  Vertical regions go at the
    bottom: stacking E on top of k vertical twists is
    r(Integer(-k) * r^3(E)).
    """
    entries = tuple(int(e) for e in entries)
    if not entries:
        raise ValueError("empty twist vector")
    horizontal_first = len(entries) % 2 == 1
    if horizontal_first:
        expr = Integer(entries[0])
    else:
        expr = Rot(Integer(-entries[0]))
    for pos, a in enumerate(entries[1:], start=1):
        vertical = (pos % 2 == 1) == horizontal_first
        if vertical:
            expr = Rot(Compose(Integer(-a), Rot(Rot(Rot(expr)))))
        else:
            expr = Compose(expr, Integer(a))
    return expr


def cf_eval(entries):
    """Value of a twist vector: fold g -> a + 1/g from the inside out."""
    entries = list(entries)
    g = Frac.make(entries[0])
    for a in entries[1:]:
        g = g.recip().add_int(a)
    return g


def cf_vector(frac):
    """A twist vector evaluating to `frac` (floor-based expansion)."""
    if frac.is_inf:
        raise NotRationalError("infinity has no twist vector")
    rev = []
    a, b = frac.num, frac.den
    while b != 1:
        q, r = divmod(a, b)
        assert r != 0  # frac is reduced, so b >= 2 forces a remainder
        rev.append(q)
        a, b = b, r
    rev.append(a)
    vec = list(reversed(rev))
    assert cf_eval(vec) == frac, (vec, str(frac))
    return vec


def slope(expr):
    """Continued-fraction slope of a rational expression.

    Structural rules: Integer(k) -> k, inf -> 1/0, Rot: s -> -1/s,
    Compose: fraction addition, valid only when at least one side is an
    integer tangle.  Anything else raises NotRationalError.
    """
    if isinstance(expr, Integer):
        return Frac.make(expr.k)
    if isinstance(expr, Infinity):
        return INF
    if isinstance(expr, Rational):
        return cf_eval(expr.entries)
    if isinstance(expr, Rot):
        return slope(expr.child).rot()
    if isinstance(expr, Compose):
        ls, rs = slope(expr.left), slope(expr.right)
        if not (ls.is_integer or rs.is_integer):
            raise NotRationalError(
                "horizontal composition needs an integer tangle on one side"
            )
        return ls.add(rs)
    if isinstance(expr, (Planar, Sigma)):
        raise NotRationalError("slope is defined for 2-strand Conway expressions")
    raise TypeError(f"not a tangle expression: {expr!r}")


# ---------------------------------------------------------------------------
# Braids.


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("need at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"braid letter {x} out of range for {self.strands} strands")

    def inverse(self):
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def permutation(self):
        """Bottom position of the strand starting at each top position."""
        pos = list(range(self.strands))  # strand id at each position
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        final = {s: q for q, s in enumerate(pos)}
        return tuple(final[s] for s in range(self.strands))


def parse_braid(text):
    """Parse 'braid <n>: i1 i2 ...' or '<n>: i1 i2 ...'."""
    t = text.strip()
    if t.startswith("braid"):
        t = t[len("braid") :].strip()
    if ":" not in t:
        raise ValueError("braid line needs '<n>: letters'")
    head, _, tail = t.partition(":")
    n = int(head.strip())
    letters = tuple(int(tok) for tok in tail.split())
    return BraidWord(n, letters)


def braid_closure(word):
    """Diagram of the braid closure; letters are read top to bottom and
    positive sigma_i puts the strand at position i over position i+1."""
    n = word.strands
    b = _Builder()
    top = [b.new_arc(2) for _ in range(n)]
    cur = list(top)
    for x in word.letters:
        i = abs(x) - 1
        # the new under-arc has one end at the crossing, one still growing
        fresh = b.new_arc(1)
        if x > 0:
            over, u_in = cur[i], cur[i + 1]
            b.add_crossing(over, u_in, fresh, sign=1)
            cur[i], cur[i + 1] = fresh, over
        else:
            over, u_in = cur[i + 1], cur[i]
            b.add_crossing(over, u_in, fresh, sign=-1)
            cur[i], cur[i + 1] = over, fresh
        # u_in's growing end terminates at the crossing
        b.ends[b.find(u_in)] -= 1
    for i in range(n):
        b.glue(cur[i], top[i])
    return b.finish([])


def closure(diagram, kind):
    """Numerator (join top pair then bottom pair) or denominator (left
    then right) closure of a 2-tangle."""
    if diagram.n != 2:
        raise ValueError("closure needs a 2-tangle")
    b, corners = _builder_from_diagram(diagram)
    x1, x2, x3, x4 = corners
    if kind in ("numerator", "num", "n"):
        b.glue(x1, x4)
        b.glue(x2, x3)
    elif kind in ("denominator", "den", "d"):
        b.glue(x1, x2)
        b.glue(x3, x4)
    else:
        raise ValueError(f"unknown closure kind {kind!r}")
    return b.finish([])


def _builder_from_diagram(diagram):
    """Reload an existing diagram into a fresh builder for more gluing."""
    b = _Builder()
    ids = {}
    bcount = {}
    for a in diagram.boundary:
        bcount[a] = bcount.get(a, 0) + 1
    for a in sorted(diagram.arcs):
        ids[a] = b.new_arc(bcount.get(a, 0))
    for c in diagram.crossings:
        b.add_crossing(ids[c.over], ids[c.under_in], ids[c.under_out], c.sign)
    b.circles = diagram.closed_components
    corners = [ids[a] for a in diagram.boundary]
    return b, corners


# ---------------------------------------------------------------------------
# Text formats.


def parse_diagram_text(text):
    """Read the line format: 'X over under_in under_out', 'B a1 ... a2n',
    'O n_circles'; '#' starts a comment."""
    crossings = []
    boundary = ()
    circles = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        try:
            vals = [int(x) for x in args]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field") from None
        if tag == "X":
            if len(vals) not in (3, 4):
                raise ValueError(f"line {lineno}: X needs 3 arc ids")
            sign = vals[3] if len(vals) == 4 else None
            crossings.append(Crossing(vals[0], vals[1], vals[2], sign))
        elif tag == "B":
            if len(vals) % 2:
                raise ValueError(f"line {lineno}: boundary length must be even")
            boundary = tuple(vals)
        elif tag == "O":
            if len(vals) != 1:
                raise ValueError(f"line {lineno}: O needs one count")
            circles = vals[0]
        else:
            raise ValueError(f"line {lineno}: unknown record {tag!r}")
    arcs = set(boundary)
    for c in crossings:
        arcs.update((c.over, c.under_in, c.under_out))
    return TangleDiagram(frozenset(arcs), tuple(crossings), boundary, circles).validate()


def diagram_to_text(diagram):
    lines = []
    for c in diagram.crossings:
        if c.sign is None:
            lines.append(f"X {c.over} {c.under_in} {c.under_out}")
        else:
            lines.append(f"X {c.over} {c.under_in} {c.under_out} {c.sign}")
    if diagram.boundary:
        lines.append("B " + " ".join(str(a) for a in diagram.boundary))
    if diagram.closed_components:
        lines.append(f"O {diagram.closed_components}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators used by the property suites and the realization search.


def noncrossing_matchings(n):
    """All non-crossing perfect matchings of 2n cyclically ordered points."""

    def rec(points):
        if not points:
            yield ()
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            inside = points[1:idx]
            outside = points[idx + 1 :]
            for mi in rec(inside):
                for mo in rec(outside):
                    yield ((first, points[idx]),) + mi + mo

    return [Planar(m) for m in rec(tuple(range(1, 2 * n + 1)))]


def random_algebraic_expr(n, rng, max_depth=4):
    """Random algebraic n-tangle expression: leaves have at most one
    crossing, nodes are r^i(A) * r^j(B)."""
    if max_depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return rng.choice(noncrossing_matchings(n))
        if n == 2:
            return Integer(rng.choice((-1, 1)))
        return Sigma(n, rng.randrange(1, n), rng.choice((-1, 1)))
    a = random_algebraic_expr(n, rng, max_depth - 1)
    b = random_algebraic_expr(n, rng, max_depth - 1)
    for _ in range(rng.randrange(0, 2 * n)):
        a = Rot(a)
    for _ in range(rng.randrange(0, 2 * n)):
        b = Rot(b)
    return Compose(a, b)


def pretzel(a, b_):
    """Two vertical twist columns side by side (the (a,b) pretzel tangle)."""
    return Compose(Rot(Integer(-a)), Rot(Integer(-b_)))


def trefoil():
    return braid_closure(BraidWord(2, (1, 1, 1)))


def figure_eight():
    return braid_closure(BraidWord(3, (1, -2, 1, -2)))


def borromean_rings():
    return braid_closure(BraidWord(3, (1, -2, 1, -2, 1, -2)))


def trivial_link(n):
    return braid_closure(BraidWord(n, ()))
