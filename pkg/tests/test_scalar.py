from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skeintrace.errors import ContextMismatch, DivisionByZero, InvalidN, ParseError, UndefinedAtRoot
from skeintrace.scalar import (
    GENERIC_CONTEXT,
    choose_modulus,
    cyclotomic_valuation,
    is_primitive_root,
    omega_order,
    root_context,
    specialize,
)

CONTEXTS = [GENERIC_CONTEXT, root_context(12), root_context(20), root_context(7)]


def laurent(ctx):
    """Random Laurent polynomials in w with small integer coefficients."""
    terms = st.lists(st.tuples(st.integers(-3, 3), st.integers(-6, 6)), max_size=4)
    return terms.map(lambda ts: sum((ctx.omega(k) * c for c, k in ts), ctx.zero))


def fractions_of(ctx):
    def build(pair):
        num, den = pair
        return num / den if not den.is_zero() else num

    return st.tuples(laurent(ctx), laurent(ctx)).map(build)


@pytest.mark.parametrize("ctx", CONTEXTS, ids=str)
@given(data=st.data())
def test_field_axioms(ctx, data):
    x, y, z = (data.draw(fractions_of(ctx)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == ctx.one


@pytest.mark.parametrize("ctx", CONTEXTS, ids=str)
@given(data=st.data())
def test_division_round_trip(ctx, data):
    x = data.draw(fractions_of(ctx))
    y = data.draw(fractions_of(ctx).filter(lambda v: not v.is_zero()))
    assert (x * y) / y == x


@pytest.mark.parametrize("M", [1, 2, 3, 8, 12, 20, 28])
def test_root_mode_relations(M):
    ctx = root_context(M)
    assert ctx.omega(M) == ctx.one
    phi = ctx.cyclotomic
    value = sum((ctx.omega(k) * int(c) for k, c in enumerate(phi.coeffs())), ctx.zero)
    assert value.is_zero()
    assert is_primitive_root(ctx.omega(), M)


@given(laurent(GENERIC_CONTEXT), laurent(GENERIC_CONTEXT), st.sampled_from([12, 20, 9]))
def test_specialize_is_a_ring_map(x, y, M):
    ctx = root_context(M)
    assert specialize(x * y + x, ctx) == specialize(x, ctx) * specialize(y, ctx) + specialize(x, ctx)


def test_generic_identity_survives_reduction():
    g = GENERIC_CONTEXT
    lhs = (g.omega(1) + g.omega(-1)) ** 3
    rhs = g.omega(3) + g.omega(-3) + (g.omega(1) + g.omega(-1)) * 3
    assert lhs == rhs
    for M in (5, 12, 20):
        assert specialize(lhs, root_context(M)) == specialize(rhs, root_context(M))


@pytest.mark.parametrize("N", [3, 5, 7])
@pytest.mark.parametrize("eps", [-1, 1])
def test_choose_modulus(N, eps):
    ctx = choose_modulus(N, eps)
    assert ctx.modulus == (4 * N if eps == -1 else 2 * N)
    assert ctx.A() ** N == ctx(eps)
    assert omega_order(ctx, -8) == N


@pytest.mark.parametrize("N", [2, 1, 4, -3])
def test_choose_modulus_rejects_even_or_small(N):
    with pytest.raises(InvalidN):
        choose_modulus(N, -1)


def test_rendering():
    g = GENERIC_CONTEXT
    assert str(g.omega(-4) + g.omega(4)) == "w^-4 + w^4"
    assert str(g.A(1) / (g.one + g.A(2) ** 2)) == "w^6 / (1 + w^8)"
    assert str(-g.omega(-5)) == "(-1)*w^-5"
    assert str(g(Fraction(3, 2))) == "3 / 2"
    assert str(g.zero) == "0"


@given(fractions_of(GENERIC_CONTEXT))
def test_parse_round_trip(x):
    assert GENERIC_CONTEXT.parse(str(x)) == x


def test_errors():
    g = GENERIC_CONTEXT
    with pytest.raises(DivisionByZero):
        g.one / g.zero
    with pytest.raises(ContextMismatch):
        g.one + root_context(12).one
    with pytest.raises(ParseError):
        g.parse("w^^2")
    with pytest.raises(UndefinedAtRoot):
        specialize(g.one / (g.one + g.omega(4)), root_context(8))


def test_cyclotomic_valuation():
    g = GENERIC_CONTEXT
    phi12 = g.omega(4) - g.omega(2) + g.one
    assert cyclotomic_valuation(phi12 * phi12 / (g.omega(1) + g.one), 12) == 2
    assert cyclotomic_valuation(g.one / phi12, 12) == -1
    assert cyclotomic_valuation(g.omega(3), 12) == 0
