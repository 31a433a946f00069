"""Temperley-Lieb diagrams in a biangle and Jones-Wenzl idempotents.

A diagram joins ``left`` points on the left side and ``right`` points on the
right side by disjoint arcs.  Points are numbered left 0..left-1, then right
0..right-1, each side from bottom to top.  Diagrams compose left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cheb import IntPolynomial, SignState, quantum_binom, quantum_factorial, quantum_int
from .errors import MalformedTangle, StrandMismatch, UndefinedAtRoot
from .scalar import GENERIC_CONTEXT
from .torus import TorusContext


@dataclass(frozen=True)
class TLDiagram:
    left: int
    right: int
    match: tuple

    def __post_init__(self):
        size = self.left + self.right
        match = tuple(self.match)
        if len(match) != size or sorted(match) != list(range(size)):
            raise MalformedTangle("match must be a permutation of the boundary points")
        if any(match[p] == p or match[match[p]] != p for p in range(size)):
            raise MalformedTangle("match must pair the boundary points")
        # cyclic boundary order: up the left side, then down the right side
        pos = list(range(self.left)) + [self.left + self.right - 1 - j for j in range(self.right)]
        where = {p: pos[p] for p in range(size)}
        chords = [(min(where[p], where[match[p]]), max(where[p], where[match[p]])) for p in range(size) if p < match[p]]
        for a, b in chords:
            for c, d in chords:
                if a < c < b < d:
                    raise MalformedTangle("diagram is not planar")
        object.__setattr__(self, "match", match)

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def from_pairs(cls, left, right, pairs):
        """Pairs of ('L', i) / ('R', j) endpoints."""
        match = [None] * (left + right)
        for a, b in pairs:
            p = a[1] if a[0] == "L" else left + a[1]
            q = b[1] if b[0] == "L" else left + b[1]
            match[p], match[q] = q, p
        if None in match:
            raise MalformedTangle("every boundary point needs an arc")
        return cls(left, right, tuple(match))

    @classmethod
    def cup_cap(cls, n, i):
        """e_i: caps joining points i and i+1 on both sides, other strands through."""
        pairs = [(("L", i), ("L", i + 1)), (("R", i), ("R", i + 1))]
        pairs += [(("L", j), ("R", j)) for j in range(n) if j not in (i, i + 1)]
        return cls.from_pairs(n, n, pairs)

    def chords(self):
        """Arcs as pairs of ('L'|'R', index) endpoints."""
        out = []
        for p, q in enumerate(self.match):
            if p < q:
                out.append((self._label(p), self._label(q)))
        return out

    def _label(self, p):
        return ("L", p) if p < self.left else ("R", p - self.left)

    def tensor_strand(self):
        """Add one through strand above every existing point."""
        pairs = self.chords() + [(("L", self.left), ("R", self.right))]
        return TLDiagram.from_pairs(self.left + 1, self.right + 1, pairs)

    def __str__(self):
        def fmt(x):
            return f"{x[0]}{x[1]}"

        return " ".join(f"{fmt(a)}-{fmt(b)}" for a, b in self.chords())


@dataclass(frozen=True)
class Crossing:
    """Two adjacent through strands i, i+1 crossing; ``sw_over`` puts the strand from bottom left on top."""

    n: int
    i: int
    sw_over: bool = True


def piece_sizes(piece):
    if isinstance(piece, TLDiagram):
        return piece.left, piece.right
    if isinstance(piece, Crossing):
        return piece.n, piece.n
    raise MalformedTangle(f"unknown tangle piece {piece!r}")


def _glue(x, y):
    """Glue x's right side to y's left side; return (diagram, closed loop count)."""
    if x.right != y.left:
        raise StrandMismatch(f"cannot glue {x.right} points to {y.left}")
    # nodes: ("a", p) for x, ("b", p) for y
    def chord(node):
        side, p = node
        return (side, (x if side == "a" else y).match[p])

    def glue(node):
        side, p = node
        if side == "a" and p >= x.left:
            return ("b", p - x.left)
        if side == "b" and p < y.left:
            return ("a", x.left + p)
        return None

    outer = [("a", p) for p in range(x.left)] + [("b", y.left + j) for j in range(y.right)]
    index = {node: k for k, node in enumerate(outer)}
    match = [None] * len(outer)
    seen = set()
    for start in outer:
        if match[index[start]] is not None:
            continue
        node = start
        while True:
            seen.add(node)
            node = chord(node)
            seen.add(node)
            nxt = glue(node)
            if nxt is None:
                break
            node = nxt
        match[index[start]], match[index[node]] = index[node], index[start]
    loops = 0
    inner = [("a", x.left + j) for j in range(x.right)]
    for start in inner:
        if start in seen:
            continue
        loops += 1
        node = start
        while node not in seen:
            seen.add(node)
            other = chord(node)
            seen.add(other)
            node = glue(other)
    return TLDiagram(x.left, y.right, tuple(match)), loops


class TLElement:
    """Linear combination of TL diagrams with a fixed boundary shape."""

    __slots__ = ("scalars", "terms")

    def __init__(self, scalars, terms):
        self.scalars = scalars
        self.terms = {d: c for d, c in terms.items() if not c.is_zero()}

    @classmethod
    def diagram(cls, d, scalars=GENERIC_CONTEXT, coeff=1):
        return cls(scalars, {d: scalars(coeff)})

    def __add__(self, other):
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return TLElement(self.scalars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = self.scalars(c)
        return TLElement(self.scalars, {d: v * c for d, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TLElement) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def coefficient(self, d):
        return self.terms.get(d, self.scalars.zero)

    def __str__(self):
        if not self.terms:
            return "0"
        lines = sorted((str(d), str(c)) for d, c in self.terms.items())
        return "\n".join(f"({c}) * <{d}>" for d, c in lines)


def tl_compose(x, y):
    """Concatenate x (left) with y (right); each closed loop gives -A^2 - A^-2."""
    scalars = x.scalars
    delta = -scalars.A(2) - scalars.A(-2)
    out = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = _glue(dx, dy)
            c = cx * cy * delta ** loops
            out[d] = out[d] + c if d in out else c
    return TLElement(scalars, out)


def _tensor_strand(x):
    return TLElement(x.scalars, {d.tensor_strand(): c for d, c in x.terms.items()})


def balanced_qint(n, scalars):
    return quantum_int(n, "balanced", scalars.A(2))


def jw_expand(n, scalars=GENERIC_CONTEXT):
    """JW_n = J + ([[n-1]]/[[n]]) J e_(n-1) J with J = JW_(n-1) plus a top strand; brackets in base A^2."""
    if n < 1:
        raise ValueError("n must be positive")
    return _jw_cached(n, scalars)


@lru_cache(maxsize=None)
def _jw_cached(n, scalars):
    for k in range(1, n + 1):
        if balanced_qint(k, scalars).is_zero():
            raise UndefinedAtRoot(f"[[{k}]] vanishes at A^2 in {scalars}")
    if n == 1:
        return TLElement.diagram(TLDiagram.identity(1), scalars)
    j = _tensor_strand(_jw_cached(n - 1, scalars))
    e = TLElement.diagram(TLDiagram.cup_cap(n, n - 2), scalars)
    coeff = balanced_qint(n - 1, scalars) / balanced_qint(n, scalars)
    return j + tl_compose(tl_compose(j, e), j).scale(coeff)


def cap_element(n, i, side, scalars=GENERIC_CONTEXT):
    """A U-turn joining strands i, i+1, as a diagram to compose on ``side`` of an n-strand element."""
    through = [j for j in range(n) if j not in (i, i + 1)]
    if side == "right":
        pairs = [(("L", i), ("L", i + 1))] + [(("L", j), ("R", k)) for k, j in enumerate(through)]
        d = TLDiagram.from_pairs(n, n - 2, pairs)
    else:
        pairs = [(("R", i), ("R", i + 1))] + [(("L", k), ("R", j)) for k, j in enumerate(through)]
        d = TLDiagram.from_pairs(n - 2, n, pairs)
    return TLElement.diagram(d, scalars)


def partial_closure(x):
    """Join the top right point to the top left point around the outside."""
    scalars = x.scalars
    delta = -scalars.A(2) - scalars.A(-2)
    out = {}
    for d, c in x.terms.items():
        n = d.left
        top_l, top_r = n - 1, d.left + d.right - 1
        match = list(d.match)
        if match[top_l] == top_r:
            factor = delta
            keep = {p: match[p] for p in range(len(match)) if p not in (top_l, top_r)}
        else:
            factor = scalars.one
            a, b = match[top_l], match[top_r]
            keep = {p: match[p] for p in range(len(match)) if p not in (top_l, top_r, a, b)}
            keep[a], keep[b] = b, a
        relabel = {p: (p if p < top_l else p - 1) for p in keep}
        new = [None] * (len(match) - 2)
        for p, q in keep.items():
            new[relabel[p]] = relabel[q]
        nd = TLDiagram(n - 1, d.right - 1, tuple(new))
        v = c * factor
        out[nd] = out[nd] + v if nd in out else v
    return TLElement(scalars, out)


def annular_closure(x):
    """Close every strand around an annulus; returns coefficients of powers of the core curve.

    A closed component is essential iff its winding around the core is nonzero;
    inessential ones bound discs and give -A^2 - A^-2.
    """
    scalars = x.scalars
    delta = -scalars.A(2) - scalars.A(-2)
    coeffs = {}
    for d, c in x.terms.items():
        n = d.left
        if d.right != n:
            raise StrandMismatch("annular closure needs equal sides")
        seen = set()
        essential = inessential = 0
        for start in range(2 * n):
            if start in seen:
                continue
            node, winding = start, 0
            while True:
                seen.add(node)
                other = d.match[node]
                seen.add(other)
                # closing arc: right j continues at left j, crossing the cut once
                if other >= n:
                    node = other - n
                    winding += 1
                else:
                    node = other + n
                    winding -= 1
                if node == start:
                    break
            if winding:
                essential += 1
            else:
                inessential += 1
        v = c * delta ** inessential
        coeffs[essential] = coeffs[essential] + v if essential in coeffs else v
    return {k: v for k, v in coeffs.items() if not v.is_zero()}


def diagram_value(d, s_left, s_right, scalars=GENERIC_CONTEXT):
    """Biangle quantum trace of a stated crossingless diagram: product of its arc values."""
    from .statesum import cap_value

    value = scalars.one
    for (sa, a), (sb, b) in d.chords():
        if sa == "L" and sb == "R":
            if s_left[a] != s_right[b]:
                return scalars.zero
        else:
            states = s_left if sa == "L" else s_right
            lo, hi = sorted((a, b))
            value = value * cap_value("left" if sa == "L" else "right", states[hi], states[lo], scalars)
            if value.is_zero():
                return value
    return value


def piece_value(piece, s_left, s_right, scalars=GENERIC_CONTEXT):
    if isinstance(piece, TLDiagram):
        return diagram_value(piece, s_left, s_right, scalars)
    if isinstance(piece, Crossing):
        ident = TLDiagram.identity(piece.n)
        e = TLDiagram.cup_cap(piece.n, piece.i)
        a_e, a_id = (scalars.A(1), scalars.A(-1)) if piece.sw_over else (scalars.A(-1), scalars.A(1))
        return a_e * diagram_value(e, s_left, s_right, scalars) + a_id * diagram_value(ident, s_left, s_right, scalars)
    raise MalformedTangle(f"unknown tangle piece {piece!r}")


def jw_biangle_oracle(n, s1, s2, scalars=GENERIC_CONTEXT):
    """Expand JW_n into diagrams and sum their stated biangle values."""
    s1, s2 = _signs(s1), _signs(s2)
    total = scalars.zero
    for d, c in jw_expand(n, scalars).terms.items():
        v = diagram_value(d, s1, s2, scalars)
        if not v.is_zero():
            total = total + c * v
    return total


def _signs(s):
    if isinstance(s, str):
        s = SignState.parse(s)
    if isinstance(s, SignState):
        return s.signs
    return tuple(s)


def jw_biangle_trace(n, s1, s2, scalars=GENERIC_CONTEXT):
    """A^(2 inv(s1)) A^(2 inv(s2)) / binom(n, p)_(A^4) when both sides carry p plus signs, else 0."""
    s1, s2 = SignState(_signs(s1)), SignState(_signs(s2))
    if len(s1) != n or len(s2) != n:
        raise StrandMismatch("each side needs n signs")
    if s1.plus_count != s2.plus_count:
        return scalars.zero
    binom = quantum_binom(n, s1.plus_count, scalars.A(4))
    return scalars.A(2 * s1.inversions + 2 * s2.inversions) / binom


TRIANGLE_SIGMA = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))


def triangle_context(scalars=GENERIC_CONTEXT):
    """Triangle torus on sides Z1, Z2, Z3 with sigma_12 = sigma_23 = sigma_31 = 1."""
    return TorusContext(TRIANGLE_SIGMA, scalars, 1, ("Z1", "Z2", "Z3"))


def jw_triangle_trace(n, s1, s2, scalars=GENERIC_CONTEXT):
    """Trace of JW_n across the corner from side 1 to side 2 of a triangle."""
    s1, s2 = SignState(_signs(s1)), SignState(_signs(s2))
    ctx = triangle_context(scalars)
    p1, p2 = s1.plus_count, s2.plus_count
    if p2 > p1:
        return ctx.zero()
    a4 = scalars.A(4)
    fact = (
        quantum_factorial(n - p2, a4) * quantum_factorial(p1, a4)
        / (quantum_factorial(n, a4) * quantum_factorial(p1 - p2, a4))
    )
    power = 2 * s1.inversions + 2 * s2.inversions - (p1 - p2) * (n - p1 + p2)
    return ctx.monomial((2 * p1 - n, 2 * p2 - n, 0), scalars.A(power) * fact)


def corner_arcs_value(s_mid, s2, scalars=GENERIC_CONTEXT):
    """n parallel corner arcs joining point i of side 1 to point i of side 2, multiplied lowest first.

    Each arc is [Z1^a Z2^b], killed for (a, b) = (-, +).
    """
    ctx = triangle_context(scalars)
    result = ctx.one()
    for a, b in zip(s_mid, s2):
        if (a, b) == (-1, 1):
            return ctx.zero()
        result = result * ctx.monomial((a, b, 0))
    return result


def jw_triangle_oracle(n, s1, s2, scalars=GENERIC_CONTEXT):
    """Split the triangle into a biangle holding JW_n and parallel corner arcs; sum middle states."""
    s1, s2 = _signs(s1), _signs(s2)
    ctx = triangle_context(scalars)
    total = ctx.zero()
    for mid in product((-1, 1), repeat=n):
        b = jw_biangle_oracle(n, s1, mid, scalars)
        if b.is_zero():
            continue
        total = total + corner_arcs_value(mid, s2, scalars) * b
    return total


def closure_polynomial(n, scalars=GENERIC_CONTEXT):
    """Annular closure of JW_n as a polynomial in the core curve, coefficients listed by degree."""
    coeffs = annular_closure(jw_expand(n, scalars))
    top = max(coeffs) if coeffs else -1
    return [coeffs.get(k, scalars.zero) for k in range(top + 1)]


def matches_int_polynomial(coeffs, poly: IntPolynomial):
    target = list(poly.coeffs)
    if len(coeffs) != len(target):
        return False
    return all(c == t for c, t in zip(coeffs, target))
