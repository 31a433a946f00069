from itertools import product

import pytest

from skeintrace.cheb import FIRST, SECOND, cheb_poly
from skeintrace.errors import BadRootOrder, NotLambdaSimple, RootModeForbidden
from skeintrace.scalar import GENERIC_CONTEXT, choose_modulus, root_context
from skeintrace.statesum import trace
from skeintrace.surface import LEFT, FIXTURES, fixture
from skeintrace.thread import (
    admissible_sequences,
    cancellation_checks,
    s_thread_oracle,
    thread_jw,
    thread_S,
    thread_T_embedded,
    thread_T_root,
    threaded_trace,
    verify_centrality,
    verify_frobenius,
    verify_identities,
    verify_puncture_central,
)
from skeintrace.torus import eval_poly_at

TORUS = fixture("punctured_torus")
PLANE = fixture("twice_punctured_plane")
ALL = [(f, c) for f in FIXTURES for c in fixture(f).curves.values()]
ALL_IDS = [f"{f}-{c.name}" for f, c in ALL]
SIMPLE = [(f, c) for f, c in ALL if c.lambda_simple]
SIMPLE_IDS = [f"{f}-{c.name}" for f, c in SIMPLE]


def brute_sequences(curve, N):
    turns = curve.turns()
    k = len(turns)
    values = range(-N, N + 1, 2)
    out = []
    for seq in product(values, repeat=k):
        if all(seq[i] >= seq[(i + 1) % k] if turns[i] == LEFT else seq[i] <= seq[(i + 1) % k] for i in range(k)):
            out.append(seq)
    return out


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
@pytest.mark.parametrize("N", range(1, 6))
def test_admissible_sequences_brute_force(curve, N):
    assert sorted(admissible_sequences(curve, N)) == sorted(brute_sequences(curve, N))


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
@pytest.mark.parametrize("N", range(1, 7))
def test_closed_form_matches_evaluation(curve, N):
    assert thread_S(curve, N).result == eval_poly_at(cheb_poly(SECOND, N), trace(curve))


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
@pytest.mark.parametrize("N", range(3, 7))
def test_difference_form(curve, N):
    diff = thread_S(curve, N).result - thread_S(curve, N - 2).result
    assert diff == eval_poly_at(cheb_poly(FIRST, N), trace(curve))


@pytest.mark.parametrize("curve", [c for _, c in ALL], ids=ALL_IDS)
@pytest.mark.parametrize("N", range(1, 4))
def test_jones_wenzl_thread_matches_cabling(curve, N):
    assert thread_jw(curve, N) == s_thread_oracle(curve, N)


def test_projection_crossing_separates_thread_from_evaluation():
    # the S_2-thread of a knot whose projection crosses itself is not S_2 of its trace
    curve = PLANE.curve("L1")
    threaded = thread_jw(curve, 2)
    assert threaded == threaded_trace(curve, cheb_poly(SECOND, 2))
    assert threaded != eval_poly_at(cheb_poly(SECOND, 2), trace(curve))


def test_link_threads_componentwise():
    curve = PLANE.curve("Linf")
    for N in range(1, 4):
        parts = [thread_S(curve.component(c), N).result for c in range(2)]
        assert thread_jw(curve, N) == parts[0] * parts[1]


def test_s_thread_monomial_counts():
    # frozen from the evaluation route S_N(Tr L0); (N+1)(N+2)/2 terms
    counts = [len(eval_poly_at(cheb_poly(SECOND, N), trace(TORUS.curve("L0")))) for N in range(2, 13)]
    assert counts == [6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91]
    assert [len(thread_S(TORUS.curve("L0"), N).result) for N in range(2, 13)] == counts


@pytest.mark.parametrize("N", [3, 5, 7])
@pytest.mark.parametrize("eps", [-1, 1])
def test_collapsed_t_thread(N, eps):
    ctx = choose_modulus(N, eps)
    r = thread_T_root(TORUS.curve("L0"), N, ctx)
    assert str(r.result) == f"[Z_inf^{-N} Z_1^{-N}] + [Z_inf^{-N} Z_1^{N}] + [Z_inf^{N} Z_1^{N}]"
    assert r.result == thread_T_embedded(TORUS.curve("L0"), N, ctx)


def test_embedded_t_thread_middle_coefficient():
    # (iota^4 + iota^-4) with iota = w^9 collapses to 2 at M = 12
    r = thread_T_embedded(TORUS.curve("Lm1"), 3, choose_modulus(3, -1))
    assert r.coefficient((-3, 0, 3)) == 2


@pytest.mark.parametrize("curve", [c for _, c in ALL], ids=ALL_IDS)
@pytest.mark.parametrize("N,eps", [(3, -1), (3, 1), (5, -1)])
def test_frobenius(curve, N, eps):
    assert verify_frobenius(curve, N, choose_modulus(N, eps)).ok


def test_frobenius_fails_generically():
    rep = verify_frobenius(TORUS.curve("L0"), 3, GENERIC_CONTEXT)
    assert not rep.ok and rep.checks[0].diff


@pytest.mark.parametrize("name", FIXTURES)
@pytest.mark.parametrize("N", [3, 5])
def test_identities(name, N):
    assert all(c.ok for c in verify_identities(name, N))


def test_centrality():
    assert all(c.ok for c in verify_centrality(3, root_context(12)))
    assert all(c.ok for c in verify_centrality(4, root_context(16)))
    assert all(c.ok for c in verify_puncture_central())
    # generically T_3(Tr L0) does not commute with Tr Linf
    with pytest.raises(BadRootOrder):
        verify_centrality(3, GENERIC_CONTEXT)


@pytest.mark.parametrize("name,N,counts", [
    ("L0", 3, (3, 4, 3)), ("L0", 5, (10, 8, 3)), ("L1", 3, (3, 4, 3)), ("L1", 5, (10, 8, 3)),
])
def test_cancellation_torus(name, N, counts):
    rep = cancellation_checks(TORUS.curve(name), N)
    assert rep.ok, rep.failures
    assert (rep.interior, rep.mixed, rep.extreme) == counts


def test_cancellation_plane():
    rep = cancellation_checks(PLANE.curve("L0"), 5)
    assert rep.ok and (rep.interior, rep.mixed, rep.extreme) == (4, 0, 2)


def test_report_json():
    rep = thread_S(TORUS.curve("L0"), 2, keep_factors=True)
    data = rep.to_json()
    assert data["admissible"] == rep.admissible and data["surviving"] == 6
    assert len(data["factors"]) == rep.admissible


def test_errors():
    with pytest.raises(NotLambdaSimple):
        thread_S(TORUS.curve("Lm1"), 3)
    with pytest.raises(RootModeForbidden):
        thread_S(TORUS.curve("L0"), 3, root_context(12))
    with pytest.raises(BadRootOrder):
        thread_T_root(TORUS.curve("L0"), 3, root_context(20))
    with pytest.raises(BadRootOrder):
        verify_identities("punctured_torus", 3, root_context(20))
