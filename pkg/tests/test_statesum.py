from itertools import product

import pytest

from skeintrace.errors import DescentFailure, MalformedTangle, NotLambdaSimple
from skeintrace.jw import TLDiagram
from skeintrace.scalar import GENERIC_CONTEXT, root_context, specialize
from skeintrace.statesum import (
    admissible_signs,
    biangle_eval,
    cap_value,
    exponent_table,
    forbidden_pair,
    loop_value,
    trace,
    trace_embedded,
    trace_simple,
)
from skeintrace.surface import FIXTURES, fixture

TORUS = fixture("punctured_torus")
PLANE = fixture("twice_punctured_plane")

SIMPLE = [(f, c) for f in FIXTURES for c in fixture(f).curves.values() if c.lambda_simple]
SIMPLE_IDS = [f"{f}-{c.name}" for f, c in SIMPLE]


def oracle_trace(curve):
    """Sign vectors avoiding every triangle's forbidden pair, each giving [Z^(sum of signs)]."""
    t = curve.triangulation
    ctx = t.torus()
    arcs = curve.component_arcs(0)
    k = len(arcs)
    result = ctx.zero()
    for signs in product((-1, 1), repeat=k):
        if any((signs[i], signs[(i + 1) % k]) == forbidden_pair(t, a.triangle, a.entry, a.exit)
               for i, a in enumerate(arcs)):
            continue
        exps = [0] * t.rank
        for (edge, _), s in zip(curve.components[0], signs):
            exps[t.edge_index(edge)] += s
        result = result + ctx.monomial(exps)
    return result


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
def test_simple_trace_matches_forbidden_pair_oracle(curve):
    assert trace_simple(curve) == oracle_trace(curve)
    assert len(trace_simple(curve)) == len(list(admissible_signs(curve)))


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
def test_simple_and_embedded_agree(curve):
    for scalars, param in ((GENERIC_CONTEXT, 1), (GENERIC_CONTEXT, 9), (root_context(12), 9)):
        assert trace_simple(curve, scalars, param) == trace_embedded(curve, scalars, param)


@pytest.mark.parametrize("curve", [c for _, c in SIMPLE], ids=SIMPLE_IDS)
def test_simple_coefficients_are_signed_powers(curve):
    for _, c in trace_embedded(curve).terms.items():
        assert c.is_laurent() and len(c.laurent_terms()) == 1
        (coef,) = c.laurent_terms().values()
        assert coef in (1, -1)


def test_skein_relation_generic():
    g = GENERIC_CONTEXT
    tr = {name: trace(c) for name, c in TORUS.curves.items()}
    assert tr["L0"] * tr["Linf"] == tr["L1"] * g.A(-1) + tr["Lm1"] * g.A(1)
    assert tr["Linf"] * tr["L0"] == tr["L1"] * g.A(1) + tr["Lm1"] * g.A(-1)


def test_plane_skein_relations():
    g = GENERIC_CONTEXT
    tr = {name: trace(c) for name, c in PLANE.curves.items()}
    assert tr["L1"] == tr["L0"] * g.A(-1) + tr["Linf"] * g.A(1)
    assert tr["Lm1"] == tr["L0"] * g.A(1) + tr["Linf"] * g.A(-1)


def test_puncture_loop_trace():
    # each term has zero pairing with every generator, so Tr(P) is central
    p = trace(TORUS.curve("P"))
    assert str(p) == "[Z_inf^-2 Z_1^-2 Z_0^-2] + [Z_inf^2 Z_1^2 Z_0^2]"
    ctx = p.ctx
    for exps in p.terms:
        assert all(ctx.pairing(exps, ctx.generator(i).sorted_terms()[0][0]) == 0 for i in range(3))


def test_trace_at_root_is_specialization():
    ctx = root_context(20)
    for c in TORUS.curves.values():
        generic, root = trace(c), trace(c, ctx)
        assert set(generic.terms) == set(root.terms) or len(root) < len(generic)
        for exps, coeff in root.terms.items():
            assert specialize(generic.coefficient(exps), ctx) == coeff


def test_exponent_table_counts():
    table = exponent_table(TORUS.curve("Lm1"))
    middle = (-1, 0, 1)
    assert table[middle] == {-4: 1, 4: 1}


def test_not_lambda_simple():
    with pytest.raises(NotLambdaSimple):
        trace_simple(TORUS.curve("Lm1"))
    with pytest.raises(NotLambdaSimple):
        trace_simple(PLANE.curve("Linf"))


def test_caps_close_to_loop_value():
    g = GENERIC_CONTEXT
    total = sum((cap_value("right", u, -u, g) * cap_value("left", u, -u, g) for u in (1, -1)), g.zero)
    assert total == loop_value(g)
    assert cap_value("left", 1, 1, g).is_zero()


def test_biangle_identity_and_errors():
    g = GENERIC_CONTEXT
    ident = TLDiagram.identity(2)
    for s1 in product((1, -1), repeat=2):
        for s2 in product((1, -1), repeat=2):
            assert biangle_eval([ident], s1, s2) == (g.one if s1 == s2 else g.zero)
    with pytest.raises(MalformedTangle):
        biangle_eval([], (), ())
    with pytest.raises(MalformedTangle):
        biangle_eval([ident], (1,), (1, 1))
    with pytest.raises(MalformedTangle):
        cap_value("top", 1, -1, g)


def test_descent_failure_is_an_error_type():
    assert issubclass(DescentFailure, Exception)
