"""Chebyshev threading: closed forms, oracles and the verification suite.

For a lambda-simple knot crossing edges e_1..e_k, an exponent sequence
(n_1..n_k) is admissible when |n_i| <= N, n_i = N mod 2, and n_i >= n_(i+1)
across a left turn, n_i <= n_(i+1) across a right turn (indices cyclic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cheb import FIRST, SECOND, cheb_poly, quantum_binom, quantum_factorial
from .errors import BadRootOrder, NotEmbedded, NotLambdaSimple, RootModeForbidden
from .scalar import GENERIC_CONTEXT, choose_modulus, cyclotomic_valuation, omega_order, specialize
from .statesum import state_sum, trace
from .surface import LEFT, RIGHT, cable, fixture
from .torus import commutes, eval_poly_at, frobenius

LL, LR, RL, RR = (LEFT, LEFT), (LEFT, RIGHT), (RIGHT, LEFT), (RIGHT, RIGHT)


@dataclass
class ThreadReport:
    result: object
    admissible: int
    surviving: int
    factors: list = field(default_factory=list)

    def to_json(self):
        return {
            "result": str(self.result),
            "admissible": self.admissible,
            "surviving": self.surviving,
            "factors": [
                {"sequence": list(seq), "a0": str(a0), "b": [str(b) for b in bs]} for seq, a0, bs in self.factors
            ],
        }


def admissible_sequences(curve, N, level=None, c=0):
    """Depth-first enumeration; ``level`` bounds |n_i| (defaults to N)."""
    level = N if level is None else level
    turns = curve.turns(c)
    k = len(turns)
    values = list(range(-level, level + 1, 2))
    seq = []

    def ok(a, b, turn):
        return a >= b if turn == LEFT else a <= b

    def rec(i):
        if i == k:
            if ok(seq[-1], seq[0], turns[-1]):
                yield tuple(seq)
            return
        for v in values:
            if i and not ok(seq[-1], v, turns[i - 1]):
                continue
            seq.append(v)
            yield from rec(i + 1)
            seq.pop()

    yield from rec(0)


def _require_simple(curve):
    if not curve.lambda_simple:
        raise NotLambdaSimple(f"curve {curve.name!r} is not lambda-simple")


def _require_root_order(scalars, power, N, what):
    if not scalars.is_root:
        raise BadRootOrder(f"{what} needs a root-of-unity context")
    # A^power = w^(-2 power)
    if omega_order(scalars, -2 * power) != N:
        raise BadRootOrder(f"A^{power} is not a primitive {N}-th root of unity in {scalars}")


@lru_cache(maxsize=None)
def _factorial(k, scalars):
    return quantum_factorial(k, scalars.A(4))


def sequence_factors(curve, seq, level, scalars=GENERIC_CONTEXT, c=0):
    """(a0, [b_1..b_k]) for one admissible sequence, with b_i at threading degree ``level``."""
    k = len(seq)
    a0 = scalars.one
    for i in range(k):
        d = (seq[i] - seq[(i + 1) % k]) // 2
        a0 = a0 * scalars.A(d * d) / _factorial(abs(d), scalars)
    bs = []
    for n_i, pattern in zip(seq, curve.patterns(c)):
        if pattern == LR:
            b = scalars.A(level * (level + n_i)) * _factorial((level - n_i) // 2, scalars) / _factorial((level + n_i) // 2, scalars)
        elif pattern == RL:
            b = scalars.A(-level * (level + n_i)) * _factorial((level + n_i) // 2, scalars) / _factorial((level - n_i) // 2, scalars)
        else:
            b = scalars.one
        bs.append(b)
    return a0, bs


def _glued_exponents(curve, seq, c=0):
    t = curve.triangulation
    exps = [0] * t.rank
    for e, n in zip(curve.points(c), seq):
        exps[t.edge_index(e)] += n
    return exps


def thread_S(curve, N, scalars=GENERIC_CONTEXT, keep_factors=False):
    """Closed form of the trace of the S_N-thread of a lambda-simple knot (generic A)."""
    _require_simple(curve)
    if scalars.is_root:
        raise RootModeForbidden("the S_N closed form divides by quantum factorials; use generic mode")
    ctx = curve.triangulation.torus(scalars, 1)
    result = ctx.zero()
    count = 0
    factors = []
    for seq in admissible_sequences(curve, N):
        count += 1
        a0, bs = sequence_factors(curve, seq, N, scalars)
        coeff = a0
        for b in bs:
            coeff = coeff * b
        if keep_factors:
            factors.append((seq, a0, bs))
        result = result + ctx.monomial(_glued_exponents(curve, seq), coeff)
    return ThreadReport(result, count, len(result), factors)


def thread_T_root(curve, N, scalars):
    """Collapsed T_N-thread: admissible sequences with every n_i = +-N, coefficient 1."""
    _require_simple(curve)
    _require_root_order(scalars, 4, N, "thread_T_root")
    ctx = curve.triangulation.torus(scalars, 1)
    result = ctx.zero()
    count = 0
    for seq in admissible_sequences(curve, N):
        if all(abs(n) == N for n in seq):
            count += 1
            result = result + ctx.monomial(_glued_exponents(curve, seq))
    return ThreadReport(result, count, len(result))


def thread_T_embedded(curve, N, scalars):
    """Triangle state sum with every crossing exponent +-N, for embedded multicurves."""
    _require_root_order(scalars, 4, N, "thread_T_embedded")
    return state_sum(curve, scalars, 1, scale=N)


def thread_jw(curve, N, scalars=GENERIC_CONTEXT):
    """S_N-thread by Jones-Wenzl idempotents: one JW_N per arc, summed over edge sign counts.

    Works for any embedded multicurve.  Each arc contributes the triangle trace of
    JW_N across its corner; summing states with fixed plus counts p turns the
    inversion factors into q-binomials [N choose p]_(A^4).  Arcs in a triangle
    multiply from the lowest to the highest.
    """
    from .jw import jw_triangle_trace

    if scalars.is_root:
        raise RootModeForbidden("Jones-Wenzl idempotents need generic A")
    t = curve.triangulation
    offsets, point_edge = [], []
    for comp in curve.components:
        offsets.append(len(point_edge))
        point_edge.extend(t.edge_index(e) for e, _ in comp)
    arcs = {}
    for a in curve.arcs:
        k = len(curve.components[a.component])
        p = offsets[a.component] + a.index
        q = offsets[a.component] + (a.index + 1) % k
        sides = t.triangles[a.triangle]
        u, v = sides.index(a.entry), sides.index(a.exit)
        # side 1 of the corner is the one whose sign pair (-, +) is killed first
        arcs[a.key] = (p, u, q, v) if t.local_sigma(a.triangle, a.entry, a.exit) == 1 else (q, v, p, u)
    tris = [(t.local_sigma_matrix(tri), [arcs[key] for key in keys]) for tri, keys in enumerate(curve.elevations) if keys]

    corner = {}

    def corner_coeff(p1, p2):
        if (p1, p2) not in corner:
            s1 = (-1,) * (N - p1) + (1,) * p1
            s2 = (-1,) * (N - p2) + (1,) * p2
            value = jw_triangle_trace(N, s1, s2, scalars)
            corner[(p1, p2)] = next(iter(value.terms.values())) if value.terms else None
        return corner[(p1, p2)]

    binoms = [quantum_binom(N, p, scalars.A(4)) for p in range(N + 1)]
    ctx = t.torus(scalars, 1)
    n_points = len(point_edge)
    # arcs checked once both counts are known: p_side2 <= p_side1
    checks = [[] for _ in range(n_points)]
    for p1, _, p2, _ in arcs.values():
        checks[max(p1, p2)].append((p1, p2))
    counts = [0] * n_points
    out = {}

    def leaf():
        coeff = scalars.one
        for p in counts:
            coeff = coeff * binoms[p]
        total = 0
        for sigma, tri_arcs in tris:
            acc = [0, 0, 0]
            for p1, u, p2, v in tri_arcs:
                coeff = coeff * corner_coeff(counts[p1], counts[p2])
                m = [0, 0, 0]
                m[u] += 2 * counts[p1] - N
                m[v] += 2 * counts[p2] - N
                total += sum(sigma[a][b] * acc[a] * m[b] for a in range(3) for b in range(3))
                for a in range(3):
                    acc[a] += m[a]
        exps = [0] * t.rank
        for i, p in enumerate(counts):
            exps[point_edge[i]] += 2 * p - N
        key = tuple(exps)
        value = coeff.mul_omega(total)
        out[key] = out[key] + value if key in out else value

    def rec(i):
        if i == n_points:
            leaf()
            return
        for p in range(N + 1):
            counts[i] = p
            if all(counts[b] <= counts[a] for a, b in checks[i]):
                rec(i + 1)

    rec(0)
    from .torus import TorusElement

    return TorusElement(ctx, out)


def threaded_trace(curve, poly, scalars=GENERIC_CONTEXT, param=1):
    """Trace of the P-thread of every component, by parallel copies.

    A component whose projection is simple has K^(i) = K^i, so this is the
    evaluation P(Tr(K)); otherwise the i-th term is the trace of i stacked
    pushoffs.  Components must be stacked; their threads multiply bottom first.
    """
    if len(curve.components) > 1:
        if not curve.stacked():
            raise NotEmbedded("threading a multicurve needs its components stacked in listed order")
        result = None
        for c in range(len(curve.components)):
            part = threaded_trace(curve.component(c), poly, scalars, param)
            result = part if result is None else result * part
        return result
    if curve.simple_projection:
        return eval_poly_at(poly, trace(curve, scalars, param))
    ctx = curve.triangulation.torus(scalars, param)
    result = ctx.zero()
    for i, p in enumerate(poly.coeffs):
        if p:
            term = ctx.one() if i == 0 else trace(cable(curve, i), scalars, param)
            result = result + term * p
    return result


@dataclass
class CheckResult:
    name: str
    ok: bool
    diff: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "diff": self.diff}


@dataclass
class FrobeniusReport:
    ok: bool
    lhs: object
    rhs: object
    closed: object
    checks: list

    def to_json(self):
        return {
            "ok": self.ok,
            "threaded": str(self.lhs),
            "frobenius": str(self.rhs),
            "closed_form": None if self.closed is None else str(self.closed),
            "checks": [c.to_json() for c in self.checks],
        }


def _compare(name, x, y):
    d = x - y
    return CheckResult(name, d.is_zero(), "" if d.is_zero() else str(d))


def verify_frobenius(curve, N, scalars=None):
    """T_N-thread trace = Frobenius of the iota-trace = collapsed closed form."""
    scalars = choose_modulus(N, -1) if scalars is None else scalars
    lhs = threaded_trace(curve, cheb_poly(FIRST, N), scalars, 1)
    rhs = frobenius(trace(curve, scalars, N * N), N)
    checks = [_compare("threaded = frobenius", lhs, rhs)]
    closed = None
    if scalars.is_root:
        if curve.lambda_simple:
            closed = thread_T_root(curve, N, scalars).result
        else:
            closed = thread_T_embedded(curve, N, scalars)
        checks.append(_compare("frobenius = closed form", rhs, closed))
    return FrobeniusReport(all(c.ok for c in checks), lhs, rhs, closed, checks)


def _threads(fx, N, scalars):
    poly = cheb_poly(FIRST, N)
    return {name: threaded_trace(c, poly, scalars) for name, c in fx.curves.items()}


def verify_identities(fixture_name, N, scalars=None):
    """Product-to-sum identities for T_N-threads, checked in the trace image."""
    scalars = choose_modulus(N, -1) if scalars is None else scalars
    _require_root_order(scalars, 4, N, "verify_identities")
    fx = fixture(fixture_name)
    th = _threads(fx, N, scalars)
    e = scalars.A(N * N)
    ei = e.inverse()
    out = []
    if fixture_name == "punctured_torus":
        out.append(_compare("L0^T * Linf^T = A^-N^2 L1^T + A^N^2 Lm1^T",
                            th["L0"] * th["Linf"], th["L1"] * ei + th["Lm1"] * e))
        out.extend(verify_centrality(N, scalars))
    else:
        out.append(_compare("L1^T = A^-N^2 L0^T + A^N^2 Linf^T", th["L1"], th["L0"] * ei + th["Linf"] * e))
        out.append(_compare("Lm1^T = A^N^2 L0^T + A^-N^2 Linf^T", th["Lm1"], th["L0"] * e + th["Linf"] * ei))
    return out


def verify_centrality(N, scalars):
    """T_N(Tr L0) commutes with Tr Linf, Tr L1 and Tr P on the punctured torus."""
    _require_root_order(scalars, 2, N, "verify_centrality")
    fx = fixture("punctured_torus")
    t0 = eval_poly_at(cheb_poly(FIRST, N), trace(fx.curve("L0"), scalars))
    out = []
    for name in ("Linf", "L1", "P"):
        other = trace(fx.curve(name), scalars)
        ok = commutes(t0, other)
        out.append(CheckResult(f"T_{N}(L0) commutes with {name}", ok, "" if ok else str(t0 * other - other * t0)))
    return out


def verify_puncture_central(scalars=GENERIC_CONTEXT):
    fx = fixture("punctured_torus")
    p = trace(fx.curve("P"), scalars)
    return [CheckResult(f"P commutes with {name}", commutes(p, trace(c, scalars))) for name, c in fx.curves.items()]


@dataclass
class CancellationReport:
    interior: int = 0
    mixed: int = 0
    extreme: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _switch_bookkeeping(curve, seq, N):
    """alpha + beta - beta' for an all +-N sequence."""
    k = len(seq)
    switches = sum(1 for i in range(k) if seq[i] != seq[(i + 1) % k])
    pats = curve.patterns()
    beta = sum(1 for n, p in zip(seq, pats) if n == N and p == LR)
    beta2 = sum(1 for n, p in zip(seq, pats) if n == N and p == RL)
    return switches / 2 + beta - beta2


def cancellation_checks(curve, N, roots=None):
    """Per-sequence realization of the three cancellation identities for the T_N-thread.

    Coefficients are exact generic rational functions; the [N]_(A^4) factors
    cancel by reduction, and the reduced fraction is then specialized.
    """
    _require_simple(curve)
    roots = [choose_modulus(N, -1), choose_modulus(N, 1)] if roots is None else roots
    g = GENERIC_CONTEXT
    report = CancellationReport()
    for seq in admissible_sequences(curve, N):
        a0, bs = sequence_factors(curve, seq, N, g)
        coeff = a0
        for b in bs:
            coeff = coeff * b
        extreme = [abs(n) == N for n in seq]
        if not any(extreme):
            report.interior += 1
            _, bs2 = sequence_factors(curve, seq, N - 2, g)
            coeff2 = a0
            for b in bs2:
                coeff2 = coeff2 * b
            for ctx in roots:
                if specialize(coeff, ctx) != specialize(coeff2, ctx):
                    report.failures.append((seq, f"S_N and S_(N-2) coefficients differ in {ctx}"))
        elif all(extreme):
            report.extreme += 1
            if coeff != 1 or _switch_bookkeeping(curve, seq, N) != 0:
                report.failures.append((seq, f"coefficient {coeff} is not 1"))
        else:
            report.mixed += 1
            # [N]_(A^4) carries Phi_(4N)(w) exactly once; extra copies upstairs force the limit 0
            if cyclotomic_valuation(coeff, 4 * N) < 1:
                report.failures.append((seq, "no surplus [N] factor in the numerator"))
            for ctx in roots:
                if not specialize(coeff, ctx).is_zero():
                    report.failures.append((seq, f"coefficient does not vanish in {ctx}"))
    return report


def s_thread_oracle(curve, N, scalars=GENERIC_CONTEXT):
    return threaded_trace(curve, cheb_poly(SECOND, N), scalars)
