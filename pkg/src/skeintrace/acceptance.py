"""The twelve acceptance criteria, shared by the CLI ``suite`` and the test module.

Each check returns a Result; ``detail`` says what was measured.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cheb import FIRST, SECOND, IntPolynomial, cheb_poly, quantum_binom, quantum_factorial
from .jw import (
    balanced_qint,
    cap_element,
    closure_polynomial,
    jw_biangle_oracle,
    jw_biangle_trace,
    jw_expand,
    jw_triangle_oracle,
    jw_triangle_trace,
    matches_int_polynomial,
    partial_closure,
    tl_compose,
)
from .scalar import GENERIC_CONTEXT, choose_modulus, root_context
from .statesum import trace, trace_embedded, trace_simple
from .surface import fixture, sigma_matrix
from .thread import (
    cancellation_checks,
    thread_jw,
    thread_S,
    thread_T_root,
    verify_centrality,
    verify_frobenius,
    verify_identities,
    verify_puncture_central,
)
from .torus import eval_poly_at


@dataclass
class Result:
    number: int
    title: str
    ok: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'} [{self.number:2d}] {self.title}: {self.detail}"


def _signs_text(signs):
    return "".join("+" if s > 0 else "-" for s in signs)


# expected trace polynomials; ``s`` scales the exponents, ``c`` renders w^k coefficients

def torus_expected(name, iota=1):
    """Punctured-torus traces in the iota-algebra, iota = w^iota."""
    if name == "L0":
        return "[Z_inf^-1 Z_1^-1] + [Z_inf^-1 Z_1^1] + [Z_inf^1 Z_1^1]"
    if name == "Lm1":
        return (
            "[Z_inf^-1 Z_1^-2 Z_0^-1] + [Z_inf^-1 Z_1^-2 Z_0^1] + "
            f"(w^{-4 * iota} + w^{4 * iota}) * [Z_inf^-1 Z_0^1] + "
            "[Z_inf^-1 Z_1^2 Z_0^1] + [Z_inf^1 Z_1^2 Z_0^1]"
        )
    raise KeyError(name)


# no closed form is tabulated for these two: frozen from the sign-vector enumerator in the tests
TORUS_DERIVED = {
    "Linf": "[Z_1^-1 Z_0^-1] + [Z_1^-1 Z_0^1] + [Z_1^1 Z_0^1]",
    "L1": "[Z_inf^-1 Z_0^-1] + [Z_inf^1 Z_0^-1] + [Z_inf^1 Z_0^1]",
}


def plane_expected(name, N=1):
    """Twice-punctured plane T_N-thread traces in the w-algebra (N = 1 gives the traces)."""
    k, n, m = 2 * N * N, N, 2 * N
    lo, hi = f"w^{-k}", f"w^{k}"
    if name == "L0":
        return f"[Z_1^{-n} Z_3^{-n}] + [Z_1^{n} Z_3^{n}]"
    if name == "Linf":
        return (
            f"[Z_1^{-n} Z_2^{-m} Z_3^{-n}] + [Z_1^{-n} Z_3^{n}] + "
            f"[Z_1^{n} Z_3^{-n}] + [Z_1^{n} Z_2^{m} Z_3^{n}]"
        )
    if name == "L1":
        return (
            f"{lo} * [Z_1^{-n} Z_2^{-m} Z_3^{-n}] + {hi} * [Z_1^{-n} Z_3^{-n}] + "
            f"{lo} * [Z_1^{-n} Z_3^{n}] + {lo} * [Z_1^{n} Z_3^{-n}] + "
            f"{hi} * [Z_1^{n} Z_3^{n}] + {lo} * [Z_1^{n} Z_2^{m} Z_3^{n}]"
        )
    if name == "Lm1":
        # A^(N^2) L0 + A^(-N^2) Linf with A = w^-2
        return (
            f"{hi} * [Z_1^{-n} Z_2^{-m} Z_3^{-n}] + {lo} * [Z_1^{-n} Z_3^{-n}] + "
            f"{hi} * [Z_1^{-n} Z_3^{n}] + {hi} * [Z_1^{n} Z_3^{-n}] + "
            f"{lo} * [Z_1^{n} Z_3^{n}] + {hi} * [Z_1^{n} Z_2^{m} Z_3^{n}]"
        )
    raise KeyError(name)


def criterion_1():
    table = {
        (FIRST, 2): (-2, 0, 1),
        (FIRST, 3): (0, -3, 0, 1),
        (FIRST, 4): (2, 0, -4, 0, 1),
        (SECOND, 2): (-1, 0, 1),
        (SECOND, 3): (0, -2, 0, 1),
        (SECOND, 4): (1, 0, -3, 0, 1),
    }
    bad = [key for key, coeffs in table.items() if cheb_poly(*key) != IntPolynomial(coeffs)]
    bad += [n for n in range(2, 21) if cheb_poly(FIRST, n) != cheb_poly(SECOND, n) - cheb_poly(SECOND, n - 2)]
    return Result(1, "Chebyshev tables", not bad, "T_2..T_4, S_2..S_4 tabulated; T_n = S_n - S_(n-2) for n <= 20"
                  if not bad else f"mismatches {bad}")


def criterion_2():
    a = GENERIC_CONTEXT.omega(1)
    bad = []
    for n in range(9):
        for p in range(n + 1):
            quotient = quantum_factorial(n, a) / (quantum_factorial(p, a) * quantum_factorial(n - p, a))
            if quantum_binom(n, p, a) != quotient:
                bad.append((n, p))
    return Result(2, "q-binomials", not bad, "inversion sum = factorial quotient for all 0 <= p <= n <= 8"
                  if not bad else f"mismatches {bad}")


def criterion_3():
    bad = []
    for N in (3, 5, 7):
        for eps in (-1, 1):
            ctx = choose_modulus(N, eps)
            x = -ctx.A(2) - ctx.A(-2)
            if cheb_poly(FIRST, N)(x) != -2:
                bad.append((N, eps))
    return Result(3, "scalar collapse", not bad, "T_N(-A^2 - A^-2) = -2 for N in 3,5,7, M in {2N, 4N}"
                  if not bad else f"fails at {bad}")


def criterion_4():
    s = sigma_matrix(fixture("punctured_torus").triangulation)
    ok = all(abs(s[i][j]) == 2 for i in range(3) for j in range(3) if i != j)
    return Result(4, "sigma-matrix", ok, f"punctured torus sigma = {s}")


def criterion_5():
    bad = []
    torus = fixture("punctured_torus")
    plane = fixture("twice_punctured_plane")
    for N in (1, 3):
        for name in ("L0", "Lm1"):
            got = str(trace(torus.curve(name), GENERIC_CONTEXT, N * N))
            if got != torus_expected(name, N * N):
                bad.append(f"torus {name} iota=w^{N * N}: {got}")
    for name, text in TORUS_DERIVED.items():
        if str(trace(torus.curve(name))) != text:
            bad.append(f"torus {name}")
    for name in ("L0", "Linf", "L1", "Lm1"):
        got = str(trace(plane.curve(name)))
        if got != plane_expected(name):
            bad.append(f"plane {name}: {got}")
    for fx in (torus, plane):
        for c in fx.curves.values():
            if c.lambda_simple and trace_simple(c) != trace_embedded(c):
                bad.append(f"{fx.name} {c.name} simple != embedded")
    return Result(5, "trace fixtures", not bad, "8 fixture traces match character for character"
                  if not bad else "; ".join(bad))


def criterion_6(max_n=6):
    """Closed-form S_N thread against polynomial evaluation of the trace."""
    bad, notes = [], []
    for fname in ("punctured_torus", "twice_punctured_plane"):
        fx = fixture(fname)
        for name in ("L0", "L1", "Linf"):
            curve = fx.curve(name)
            for N in range(1, max_n + 1):
                poly = cheb_poly(SECOND, N)
                if curve.lambda_simple:
                    ok = thread_S(curve, N).result == eval_poly_at(poly, trace(curve))
                elif len(curve.components) > 1:
                    # a link is threaded component by component
                    closed = oracle = None
                    for c in range(len(curve.components)):
                        comp = curve.component(c)
                        part, ev = thread_S(comp, N).result, eval_poly_at(poly, trace(comp))
                        closed = part if closed is None else closed * part
                        oracle = ev if oracle is None else oracle * ev
                    ok = closed == oracle
                else:
                    # no lambda-simple closed form: the Jones-Wenzl state sum is the S_N thread
                    ok = thread_jw(curve, N) == eval_poly_at(poly, trace(curve))
                    if not ok:
                        notes.append(f"{fname} {name} N={N}")
                        continue
                if not ok:
                    bad.append(f"{fname} {name} N={N}")
    if notes:
        first = notes[0].split(" N=")[0]
        bad.append(
            f"{first}: projection has a crossing, S_N thread (JW state sum = cabling) "
            f"differs from S_N(Tr) for N in {sorted({int(n.split('N=')[1]) for n in notes})}"
        )
    return Result(6, "threading oracle", not bad, f"all curves agree for N <= {max_n}" if not bad else "; ".join(bad))


def _degree_two(values):
    d = list(values)
    for _ in range(3):
        d = [b - a for a, b in zip(d, d[1:])]
        if _ == 1:
            second = d
    return all(x == 0 for x in d) and any(x != 0 for x in second)


def criterion_7():
    bad = []
    torus, plane = fixture("punctured_torus"), fixture("twice_punctured_plane")
    counts = {}
    for N in (3, 5, 7):
        for eps in (-1, 1):
            ctx = choose_modulus(N, eps)
            for fx, exp in ((torus, "torus"), (plane, "plane")):
                got = thread_T_root(fx.curve("L0"), N, ctx).result
                want = _scaled_L0(exp, N)
                if str(got) != want:
                    bad.append(f"{exp} N={N}: {got}")
                counts.setdefault(exp, set()).add(len(got))
    if counts["torus"] != {3} or counts["plane"] != {2}:
        bad.append(f"T_N monomial counts {counts}")
    s_counts = [len(thread_S(torus.curve("L0"), N).result) for N in range(2, 13)]
    if not _degree_two(s_counts):
        bad.append(f"S_N counts {s_counts} are not quadratic in N")
    return Result(7, "collapse at roots", not bad,
                  f"T_N counts 3 and 2 for N in 3,5,7; S_N counts {s_counts} quadratic" if not bad else "; ".join(bad))


def _scaled_L0(which, N):
    if which == "torus":
        return f"[Z_inf^{-N} Z_1^{-N}] + [Z_inf^{-N} Z_1^{N}] + [Z_inf^{N} Z_1^{N}]"
    return plane_expected("L0", N)


def criterion_8():
    bad = []
    checked = 0
    for N in (3, 5):
        for eps in (-1, 1):
            ctx = choose_modulus(N, eps)
            for fname in ("punctured_torus", "twice_punctured_plane"):
                fx = fixture(fname)
                for name, curve in fx.curves.items():
                    checked += 1
                    if not verify_frobenius(curve, N, ctx).ok:
                        bad.append(f"{fname} {name} N={N} M={ctx.modulus}")
    control = verify_frobenius(fixture("punctured_torus").curve("L0"), 3, GENERIC_CONTEXT)
    if control.ok:
        bad.append("generic-mode control shows no difference")
    return Result(8, "Frobenius compatibility", not bad,
                  f"{checked} three-way checks equal; generic control differs" if not bad else "; ".join(bad))


def criterion_9():
    bad = []
    for N in (3, 5):
        ctx = choose_modulus(N, -1)
        for fname in ("punctured_torus", "twice_punctured_plane"):
            for check in verify_identities(fname, N, ctx):
                if not check.ok:
                    bad.append(f"{fname} N={N}: {check.name}")
    torus = fixture("punctured_torus")
    g = GENERIC_CONTEXT
    tr = {name: trace(c) for name, c in torus.curves.items()}
    if tr["L0"] * tr["Linf"] != tr["L1"] * g.A(-1) + tr["Lm1"] * g.A(1):
        bad.append("N = 1 skein relation")
    return Result(9, "skein identities", not bad, "three product-to-sum identities for N = 3, 5; N = 1 skein relation"
                  if not bad else "; ".join(bad))


def criterion_10():
    bad = []
    for N, M in ((3, 12), (4, 16)):
        for check in verify_centrality(N, root_context(M)):
            if not check.ok:
                bad.append(f"N={N}: {check.name}")
    for check in verify_puncture_central():
        if not check.ok:
            bad.append(check.name)
    return Result(10, "centrality", not bad, "T_N(L0) central for N = 3 (M=12) and N = 4 (M=16); P central"
                  if not bad else "; ".join(bad))


def criterion_11():
    from itertools import product

    g = GENERIC_CONTEXT
    bad = []
    for n in range(1, 6):
        j = jw_expand(n)
        if tl_compose(j, j) != j:
            bad.append(f"idempotency n={n}")
        for i in range(n - 1):
            if not tl_compose(j, cap_element(n, i, "right")).is_zero() or not tl_compose(cap_element(n, i, "left"), j).is_zero():
                bad.append(f"capping n={n} i={i}")
        if 2 <= n <= 4 and partial_closure(j) != jw_expand(n - 1).scale(-balanced_qint(n + 1, g) / balanced_qint(n, g)):
            bad.append(f"partial closure n={n}")
        if not matches_int_polynomial(closure_polynomial(n), cheb_poly(SECOND, n)):
            bad.append(f"annulus closure n={n}")
    for n in range(1, 5):
        for s1 in product((1, -1), repeat=n):
            for s2 in product((1, -1), repeat=n):
                if jw_biangle_trace(n, s1, s2) != jw_biangle_oracle(n, s1, s2):
                    bad.append(f"biangle n={n} {_signs_text(s1)}|{_signs_text(s2)}")
    for n in range(1, 4):
        for s1 in product((1, -1), repeat=n):
            for s2 in product((1, -1), repeat=n):
                if jw_triangle_trace(n, s1, s2) != jw_triangle_oracle(n, s1, s2):
                    bad.append(f"triangle n={n} {_signs_text(s1)}|{_signs_text(s2)}")
    return Result(11, "Jones-Wenzl suite", not bad, "idempotent, capping, closures, biangle n<=4, triangle n<=3"
                  if not bad else "; ".join(bad[:5]))


def criterion_12():
    bad = []
    tallies = []
    torus, plane = fixture("punctured_torus"), fixture("twice_punctured_plane")
    for fx, name in ((torus, "L0"), (torus, "L1"), (plane, "L0")):
        for N in (3, 5):
            rep = cancellation_checks(fx.curve(name), N)
            tallies.append(rep.interior + rep.mixed + rep.extreme)
            bad.extend(f"{fx.name} {name} N={N} {seq}: {why}" for seq, why in rep.failures)
    return Result(12, "cancellation identities", not bad, f"{sum(tallies)} admissible sequences checked"
                  if not bad else "; ".join(bad[:5]))


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
)


def run_all(stop_on_failure=False):
    results = []
    for check in CRITERIA:
        r = check()
        results.append(r)
        if stop_on_failure and not r.ok:
            break
    return results
