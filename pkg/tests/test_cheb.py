import math
from itertools import permutations

import pytest

from skeintrace.cheb import (
    FIRST,
    SECOND,
    IntPolynomial,
    SignState,
    X,
    all_states,
    cheb_poly,
    inversion_distribution,
    quantum_binom,
    quantum_factorial,
    quantum_int,
)
from skeintrace.scalar import GENERIC_CONTEXT


@pytest.mark.parametrize("n", range(0, 16))
def test_trigonometric_oracle(n):
    # T_n(2 cos t) = 2 cos(n t) and S_n(2 cos t) = sin((n+1) t) / sin t
    for t in (0.3, 1.1, 2.5):
        x = 2 * math.cos(t)
        assert cheb_poly(FIRST, n)(x) == pytest.approx(2 * math.cos(n * t), abs=1e-8)
        assert cheb_poly(SECOND, n)(x) == pytest.approx(math.sin((n + 1) * t) / math.sin(t), abs=1e-8)


def test_low_degrees():
    assert cheb_poly(FIRST, 0) == IntPolynomial((2,))
    assert cheb_poly(FIRST, 1) == X
    assert cheb_poly(SECOND, 0) == IntPolynomial((1,))
    assert cheb_poly(SECOND, 1) == X


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_composition(m, n):
    assert cheb_poly(FIRST, m * n) == cheb_poly(FIRST, m).compose(cheb_poly(FIRST, n))


@pytest.mark.parametrize("n", range(0, 21))
def test_laurent_identity(n):
    g = GENERIC_CONTEXT
    a = g.omega(1)
    assert cheb_poly(FIRST, n)(a + a.inverse()) == a ** n + a.inverse() ** n


def test_sign_states():
    s = SignState.parse("+-+")
    assert s.plus_count == 2
    assert s.inversions == 1
    assert SignState.parse("-+").inversions == 0
    assert len(list(all_states(4))) == 16
    assert len(list(all_states(4, 2))) == 6


@pytest.mark.parametrize("n", range(0, 7))
def test_inversion_distribution_brute_force(n):
    # inversions of a sign word: pairs (+ before -), counted directly over distinct permutations
    for p in range(n + 1):
        word = "+" * p + "-" * (n - p)
        counts = {}
        for perm in set(permutations(word)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] == "+" and perm[j] == "-")
            counts[inv] = counts.get(inv, 0) + 1
        dist = inversion_distribution(n, p)
        assert {k: v for k, v in enumerate(dist) if v} == counts


def test_quantum_integers():
    g = GENERIC_CONTEXT
    a = g.omega(1)
    assert quantum_int(3, "unbalanced", a) == g.one + a + a ** 2
    assert quantum_int(3, "balanced", a) == a.inverse() ** 2 + g.one + a ** 2
    assert quantum_factorial(0, a) == g.one
    assert quantum_binom(4, 2, a) == g.one + a + a ** 2 * 2 + a ** 3 + a ** 4
