"""Chebyshev polynomials T_n, S_n and q-combinatorics.

Quantum integers come in two flavours:
    [n]_a   = a^(n-1) + a^(n-2) + ... + 1          (unbalanced)
    [[n]]_a = a^(n-1) + a^(n-3) + ... + a^-(n-1)   (balanced)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

FIRST = "first"
SECOND = "second"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients indexed by degree, trailing zeros trimmed."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def shift(self):
        """Multiply by x."""
        return IntPolynomial((0,) + self.coeffs) if self.coeffs else self

    def compose(self, inner):
        """self(inner(x)) by Horner's scheme."""
        result = IntPolynomial(())
        for c in reversed(self.coeffs):
            result = result * inner + IntPolynomial((c,))
        return result

    def __call__(self, x, one=None):
        """Horner evaluation at any ring element supporting + and *.

        ``one`` is the multiplicative identity used for the constant term; it
        defaults to the integer 1, which works for Scalars.
        """
        if one is None:
            one = 1
        if not self.coeffs:
            return one * 0
        result = one * self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * x + one * c
        return result

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


X = IntPolynomial((0, 1))


@lru_cache(maxsize=None)
def cheb_poly(kind, n):
    """T_n (kind='first') or S_n (kind='second') via P_n = x P_{n-1} - P_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == FIRST:
        p0, p1 = IntPolynomial((2,)), X
    elif kind == SECOND:
        p0, p1 = IntPolynomial((1,)), X
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    if n == 0:
        return p0
    for _ in range(n - 1):
        p0, p1 = p1, p1.shift() - p0
    return p1


@dataclass(frozen=True)
class SignState:
    """Sequence of signs (+1 / -1) on boundary points, listed bottom to top."""

    signs: tuple

    @classmethod
    def parse(cls, text):
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()))
        except KeyError:
            raise ValueError(f"sign state must use + and -, got {text!r}") from None

    def __len__(self):
        return len(self.signs)

    @property
    def plus_count(self):
        return sum(1 for s in self.signs if s > 0)

    @property
    def inversions(self):
        """Pairs x < x' (bottom to top) with s(x) = + and s(x') = -."""
        count, pluses = 0, 0
        for s in self.signs:
            if s > 0:
                pluses += 1
            else:
                count += pluses
        return count

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


def all_states(n, plus_count=None):
    """Every SignState of length n, optionally with a fixed number of + signs."""
    if plus_count is None:
        for mask in range(1 << n):
            yield SignState(tuple(1 if (mask >> i) & 1 else -1 for i in range(n)))
        return
    for pos in combinations(range(n), plus_count):
        chosen = set(pos)
        yield SignState(tuple(1 if i in chosen else -1 for i in range(n)))


def _power(a, k):
    return a ** k


def quantum_int(n, kind, a):
    """[n]_a (kind='unbalanced') or [[n]]_a (kind='balanced') in sum form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = a.ctx.one
    if kind == "unbalanced":
        total = one * 0
        for k in range(n):
            total = total + _power(a, k)
        return total
    if kind == "balanced":
        total = one * 0
        for k in range(n):
            total = total + _power(a, n - 1 - 2 * k)
        return total
    raise ValueError(f"unknown quantum integer kind {kind!r}")


def quantum_factorial(n, a):
    result = a.ctx.one
    for k in range(2, n + 1):
        result = result * quantum_int(k, "unbalanced", a)
    return result


@lru_cache(maxsize=None)
def inversion_distribution(n, p):
    """Coefficient list c with c[k] = #{states of length n, p plus signs, k inversions}.

    Built position by position: appending a - after j plus signs adds j inversions.
    """
    table = {(0, 0): {0: 1}}
    for _ in range(n):
        nxt = {}
        for (length, pluses), dist in table.items():
            for sign in (1, -1):
                np_ = pluses + (sign > 0)
                if np_ > p or (length + 1 - np_) > n - p:
                    continue
                bump = 0 if sign > 0 else pluses
                slot = nxt.setdefault((length + 1, np_), {})
                for k, c in dist.items():
                    slot[k + bump] = slot.get(k + bump, 0) + c
        table = nxt
    dist = table.get((n, p), {})
    if not dist:
        return ()
    out = [0] * (max(dist) + 1)
    for k, c in dist.items():
        out[k] = c
    return tuple(out)


def quantum_binom(n, p, a):
    """Sum over states s with |s| = p of a^inv(s); total even where [k]_a vanishes."""
    if p < 0 or p > n:
        return a.ctx.zero
    total = a.ctx.zero
    for k, c in enumerate(inversion_distribution(n, p)):
        if c:
            total = total + c * _power(a, k)
    return total
