"""Quantum traces of curves by triangle state sums.

Every crossing point gets a sign.  An arc crossing a triangle from side u to
side v carries the triangle bracket [Z_u^e_u Z_v^e_v]; one of the four sign
pairs is killed, namely (-, +) listed with the side u first when the local
sigma_t(u, v) is +1.  Inside a triangle the arcs multiply from the lowest to
the highest, and a triangle product of Weyl monomials only produces the power
w^(param * sum_{i<j} <m_i, m_j>_t).  The tensor product of the triangle Weyl
monomials is the image of the glued Weyl monomial, so descent adds no scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DescentFailure, MalformedTangle, NotLambdaSimple
from .scalar import GENERIC_CONTEXT
from .surface import LEFT
from .torus import TorusContext, TorusElement


@dataclass(frozen=True)
class TriangleTerm:
    triangle: int
    entry: str
    exit: str
    signs: tuple
    value: TorusElement


def triangle_torus(t, tri, scalars=GENERIC_CONTEXT, param=1):
    sides = t.triangles[tri]
    return TorusContext(t.local_sigma_matrix(tri), scalars, param, tuple(f"Z_{e}" for e in sides))


def forbidden_pair(t, tri, entry, exit_):
    """The sign pair (entry, exit) whose triangle term vanishes."""
    return (-1, 1) if t.local_sigma(tri, entry, exit_) == 1 else (1, -1)


def triangle_term(t, tri, entry, exit_, eps_entry, eps_exit, scalars=GENERIC_CONTEXT, param=1):
    ctx = triangle_torus(t, tri, scalars, param)
    signs = (eps_entry, eps_exit)
    if signs == forbidden_pair(t, tri, entry, exit_):
        return TriangleTerm(tri, entry, exit_, signs, ctx.zero())
    sides = t.triangles[tri]
    exps = [0, 0, 0]
    exps[sides.index(entry)] += eps_entry
    exps[sides.index(exit_)] += eps_exit
    return TriangleTerm(tri, entry, exit_, signs, ctx.monomial(exps))


def admissible_signs(curve, c=0):
    """Sign vectors meeting the turn inequalities: s_i >= s_(i+1) after a left turn, <= after a right one."""
    turns = curve.turns(c)
    k = len(turns)
    for signs in product((-1, 1), repeat=k):
        if all(
            (signs[i] >= signs[(i + 1) % k]) if turns[i] == LEFT else (signs[i] <= signs[(i + 1) % k])
            for i in range(k)
        ):
            yield signs


def trace_simple(curve, scalars=GENERIC_CONTEXT, param=1):
    """Sum of [Z_e1^s1 ... Z_ek^sk] over admissible sign vectors of a lambda-simple knot."""
    if not curve.lambda_simple:
        raise NotLambdaSimple(f"curve {curve.name!r} is not lambda-simple")
    t = curve.triangulation
    ctx = t.torus(scalars, param)
    edges = curve.points(0)
    result = ctx.zero()
    for signs in admissible_signs(curve):
        exps = [0] * t.rank
        for e, s in zip(edges, signs):
            exps[t.edge_index(e)] += s
        result = result + ctx.monomial(exps)
    return result


class _Layout:
    """Flattened points and arcs of a curve, for the sign enumeration."""

    def __init__(self, curve):
        t = curve.triangulation
        self.t = t
        self.offsets = []
        self.point_edge = []
        start = 0
        for comp in curve.components:
            self.offsets.append(start)
            self.point_edge.extend(t.edge_index(e) for e, _ in comp)
            start += len(comp)
        self.n_points = start
        arcs = {}
        self.checks = [[] for _ in range(self.n_points)]
        for a in curve.arcs:
            k = len(curve.components[a.component])
            p = self.offsets[a.component] + a.index
            q = self.offsets[a.component] + (a.index + 1) % k
            sides = t.triangles[a.triangle]
            arcs[a.key] = (p, q, sides.index(a.entry), sides.index(a.exit))
            # the arc is checked once both of its points carry signs
            self.checks[max(p, q)].append((p, q, forbidden_pair(t, a.triangle, a.entry, a.exit)))
        self.triangles = []
        for tri, keys in enumerate(curve.elevations):
            if keys:
                self.triangles.append((t.local_sigma_matrix(tri), [arcs[k] for k in keys], t.triangles[tri]))


def _states(layout):
    signs = [0] * layout.n_points
    checks = layout.checks

    def rec(i):
        if i == layout.n_points:
            yield signs
            return
        for s in (-1, 1):
            signs[i] = s
            if all((signs[p], signs[q]) != bad for p, q, bad in checks[i]):
                yield from rec(i + 1)
        signs[i] = 0

    yield from rec(0)


def exponent_table(curve):
    """Map glued exponent vector -> {E: count} with E the total triangle pairing exponent."""
    layout = _Layout(curve)
    t = curve.triangulation
    table = {}
    for signs in _states(layout):
        total = 0
        glued = [0] * t.rank
        per_side = {}
        for sigma, arcs, sides in layout.triangles:
            vecs = []
            for p, q, u, v in arcs:
                m = [0, 0, 0]
                m[u] += signs[p]
                m[v] += signs[q]
                vecs.append(m)
            acc = [0, 0, 0]
            for m in vecs:
                # <acc, m> with acc the sum of the lower arcs
                total += sum(sigma[a][b] * acc[a] * m[b] for a in range(3) if acc[a] for b in range(3) if m[b])
                for a in range(3):
                    acc[a] += m[a]
            for a in range(3):
                per_side.setdefault(sides[a], []).append(acc[a])
        for p in range(layout.n_points):
            glued[layout.point_edge[p]] += signs[p]
        for e, values in per_side.items():
            if any(v != glued[t.edge_index(e)] for v in values):
                raise DescentFailure(f"edge {e!r} has unequal exponents in its two triangles")
        key = tuple(glued)
        slot = table.setdefault(key, {})
        slot[total] = slot.get(total, 0) + 1
    return table


def state_sum(curve, scalars=GENERIC_CONTEXT, param=1, scale=1):
    """Sum over sign states of w^(param scale^2 E) [Z^(scale x)] in the glued torus."""
    ctx = curve.triangulation.torus(scalars, param)
    weight = param * scale * scale
    terms = {}
    for exps, dist in exponent_table(curve).items():
        coeff = scalars.zero
        for e, count in dist.items():
            coeff = coeff + scalars.omega(weight * e) * count
        terms[tuple(scale * x for x in exps)] = coeff
    return TorusElement(ctx, terms)


def trace_embedded(curve, scalars=GENERIC_CONTEXT, param=1):
    return state_sum(curve, scalars, param)


def trace(curve, scalars=GENERIC_CONTEXT, param=1):
    """trace_simple when it applies, trace_embedded otherwise."""
    if curve.lambda_simple:
        return trace_simple(curve, scalars, param)
    return trace_embedded(curve, scalars, param)


# biangle evaluation

def loop_value(scalars):
    return -scalars.A(2) - scalars.A(-2)


def cap_value(side, upper, lower, scalars):
    """Arc with both ends on one side of the biangle, states listed top end first.

    ``side`` names the biangle side holding the two ends.
    """
    if upper == lower:
        return scalars.zero
    if side == "left":
        return -scalars.omega(-5) if upper > 0 else scalars.omega(-1)
    if side == "right":
        return scalars.omega(1) if upper > 0 else -scalars.omega(5)
    raise MalformedTangle(f"unknown side {side!r}")


def biangle_eval(pieces, left_state, right_state, scalars=GENERIC_CONTEXT):
    """Quantum trace of stated pieces glued left to right across a biangle.

    ``pieces`` are TL diagrams or crossings (see the jw module); intermediate
    states are summed over.  ``left_state`` and ``right_state`` list signs from
    bottom to top.
    """
    from .jw import piece_value, piece_sizes

    if not pieces:
        raise MalformedTangle("empty tangle")
    if piece_sizes(pieces[0])[0] != len(left_state) or piece_sizes(pieces[-1])[1] != len(right_state):
        raise MalformedTangle("boundary states do not match the tangle")
    for a, b in zip(pieces, pieces[1:]):
        if piece_sizes(a)[1] != piece_sizes(b)[0]:
            raise MalformedTangle("consecutive pieces do not share a boundary")
    current = {tuple(left_state): scalars.one}
    for i, piece in enumerate(pieces):
        width = piece_sizes(piece)[1]
        targets = [tuple(right_state)] if i == len(pieces) - 1 else list(product((1, -1), repeat=width))
        nxt = {}
        for s, c in current.items():
            for r in targets:
                v = piece_value(piece, s, r, scalars)
                if not v.is_zero():
                    nxt[r] = nxt[r] + c * v if r in nxt else c * v
        current = nxt
    return current.get(tuple(right_state), scalars.zero)
