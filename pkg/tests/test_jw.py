from itertools import product

import pytest

from skeintrace.cheb import SECOND, cheb_poly
from skeintrace.errors import MalformedTangle, StrandMismatch, UndefinedAtRoot
from skeintrace.jw import (
    TLDiagram,
    TLElement,
    annular_closure,
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
from skeintrace.scalar import GENERIC_CONTEXT, root_context

g = GENERIC_CONTEXT


def states(n):
    return list(product((1, -1), repeat=n))


def catalan(n):
    out = 1
    for k in range(n):
        out = out * 2 * (2 * k + 1) // (k + 2)
    return out


def test_jw2_expansion():
    j = jw_expand(2)
    assert j.coefficient(TLDiagram.identity(2)) == g.one
    # 1 / [[2]] with [[2]] = A^2 + A^-2
    assert j.coefficient(TLDiagram.cup_cap(2, 0)) == g.one / (g.A(2) + g.A(-2))
    assert str(j.coefficient(TLDiagram.cup_cap(2, 0))) == "w^4 / (1 + w^8)"


@pytest.mark.parametrize("n", range(1, 6))
def test_expansion_uses_every_planar_diagram(n):
    assert len(jw_expand(n).terms) == catalan(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_idempotent(n):
    j = jw_expand(n)
    assert tl_compose(j, j) == j


@pytest.mark.parametrize("n", range(2, 6))
def test_capping_kills(n):
    j = jw_expand(n)
    for i in range(n - 1):
        assert tl_compose(j, cap_element(n, i, "right")).is_zero()
        assert tl_compose(cap_element(n, i, "left"), j).is_zero()


@pytest.mark.parametrize("n", range(2, 5))
def test_partial_closure(n):
    expected = jw_expand(n - 1).scale(-balanced_qint(n + 1, g) / balanced_qint(n, g))
    assert partial_closure(jw_expand(n)) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_annular_closure_is_second_kind_chebyshev(n):
    assert matches_int_polynomial(closure_polynomial(n), cheb_poly(SECOND, n))


def test_identity_closure_counts_core_curves():
    ident = TLElement.diagram(TLDiagram.identity(3))
    assert annular_closure(ident) == {3: g.one}


@pytest.mark.parametrize("n", range(1, 5))
def test_biangle_formula_against_oracle(n):
    for s1 in states(n):
        for s2 in states(n):
            assert jw_biangle_trace(n, s1, s2) == jw_biangle_oracle(n, s1, s2)


@pytest.mark.parametrize("n", range(1, 4))
def test_triangle_formula_against_oracle(n):
    for s1 in states(n):
        for s2 in states(n):
            assert jw_triangle_trace(n, s1, s2) == jw_triangle_oracle(n, s1, s2)


def test_string_states():
    assert jw_biangle_trace(2, "+-", "-+") == g.A(2) / (g.one + g.A(4))
    assert jw_biangle_trace(2, "++", "+-").is_zero()


def test_errors():
    with pytest.raises(UndefinedAtRoot):
        jw_expand(2, root_context(16))  # A^4 = -1 kills [[2]]
    with pytest.raises(StrandMismatch):
        jw_biangle_trace(2, "+", "++")
    with pytest.raises(MalformedTangle):
        TLDiagram(2, 2, (3, 2, 1, 0))  # crossing chords
    with pytest.raises(MalformedTangle):
        TLDiagram(1, 1, (0, 1))
    with pytest.raises(ValueError):
        jw_expand(0)
