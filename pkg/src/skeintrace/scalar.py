"""Exact scalars in the variable w (the fourth root of q).

Two backends share one class:

* generic mode: reduced fractions of integer Laurent polynomials in w;
* root mode: the cyclotomic field Q[w]/Phi_M, elements stored as rational
  polynomials of degree < phi(M).

The conventions q = w^4 and A = w^-2 are fixed throughout the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import flint

from .errors import ContextMismatch, DivisionByZero, InvalidN, ParseError, UndefinedAtRoot

GENERIC = "generic"
ROOT = "root"

_ZPOLY = flint.fmpz_poly
_QPOLY = flint.fmpq_poly
_ONE_Z = _ZPOLY([1])
_ZERO_Z = _ZPOLY([])


@lru_cache(maxsize=None)
def _cyclotomic(modulus):
    return _ZPOLY.cyclotomic(modulus)


@lru_cache(maxsize=None)
def _omega_powers(modulus):
    phi = _QPOLY(_cyclotomic(modulus))
    x = _QPOLY([0, 1])
    table = [_QPOLY([1]) % phi]
    for _ in range(modulus - 1):
        table.append((table[-1] * x) % phi)
    return tuple(table)


@dataclass(frozen=True)
class ScalarContext:
    """Which field scalars live in: ``generic`` or ``root`` with modulus M."""

    mode: str = GENERIC
    modulus: int | None = None

    def __post_init__(self):
        if self.mode == GENERIC:
            if self.modulus is not None:
                raise ValueError("generic context takes no modulus")
        elif self.mode == ROOT:
            if not isinstance(self.modulus, int) or self.modulus < 1:
                raise ValueError("root context needs a positive integer modulus")
        else:
            raise ValueError(f"unknown scalar mode {self.mode!r}")

    @property
    def is_root(self):
        return self.mode == ROOT

    @property
    def cyclotomic(self):
        """Phi_M as a flint integer polynomial (root mode only)."""
        if not self.is_root:
            raise ContextMismatch("generic context has no cyclotomic polynomial")
        return _cyclotomic(self.modulus)

    def __str__(self):
        return GENERIC if not self.is_root else f"root:{self.modulus}"

    def __call__(self, value):
        """Coerce an int, Fraction or Scalar of this context."""
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise ContextMismatch(f"scalar from {value.ctx} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if self.is_root:
                return Scalar._root(self, _QPOLY([value.numerator]) / value.denominator)
            return Scalar._generic(self, _ZPOLY([value.numerator]), _ZPOLY([value.denominator]), 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def omega(self, k=1):
        """The monomial w^k."""
        if self.is_root:
            return Scalar._raw_root(self, _omega_powers(self.modulus)[k % self.modulus])
        return Scalar._raw_generic(self, _ONE_Z, _ONE_Z, k)

    def A(self, k=1):
        """The Kauffman variable A^k = w^(-2k)."""
        return self.omega(-2 * k)

    def q(self, k=1):
        return self.omega(4 * k)

    def parse(self, text):
        return _Parser(text, self).parse()


GENERIC_CONTEXT = ScalarContext()


def root_context(modulus):
    return ScalarContext(ROOT, modulus)


def _valuation(poly):
    for i, c in enumerate(poly.coeffs()):
        if c != 0:
            return i
    return 0


class Scalar:
    """Immutable exact scalar; build through a ScalarContext."""

    __slots__ = ("ctx", "_num", "_den", "_shift", "_hash")

    # -- construction -------------------------------------------------------

    @classmethod
    def _raw_generic(cls, ctx, num, den, shift):
        self = object.__new__(cls)
        self.ctx = ctx
        self._num = num
        self._den = den
        self._shift = shift
        self._hash = None
        return self

    @classmethod
    def _raw_root(cls, ctx, poly):
        self = object.__new__(cls)
        self.ctx = ctx
        self._num = poly
        self._den = None
        self._shift = 0
        self._hash = None
        return self

    @classmethod
    def _generic(cls, ctx, num, den, shift):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            return cls._raw_generic(ctx, _ZERO_Z, _ONE_Z, 0)
        v = _valuation(num)
        if v:
            num = num.right_shift(v)
            shift += v
        v = _valuation(den)
        if v:
            den = den.right_shift(v)
            shift -= v
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        return cls._raw_generic(ctx, num, den, shift)

    @classmethod
    def _root(cls, ctx, poly):
        phi = _QPOLY(_cyclotomic(ctx.modulus))
        return cls._raw_root(ctx, poly % phi)

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return self._num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    @property
    def numerator(self):
        """Generic mode: (integer coefficient list, lowest w-exponent)."""
        self._need_generic()
        return [int(c) for c in self._num.coeffs()], self._shift

    @property
    def denominator(self):
        """Generic mode: integer coefficient list of the monic-up-to-content denominator."""
        self._need_generic()
        return [int(c) for c in self._den.coeffs()]

    @property
    def coefficients(self):
        """Root mode: rational coefficients of the reduced polynomial in w."""
        if not self.ctx.is_root:
            raise ContextMismatch("coefficients() is a root-mode accessor")
        return [Fraction(int(c.p), int(c.q)) for c in self._num.coeffs()]

    def is_laurent(self):
        return not self.ctx.is_root and self._den.is_one()

    def laurent_terms(self):
        """Generic Laurent polynomial as {exponent: int}; raises if not Laurent."""
        if not self.is_laurent():
            raise ValueError("scalar is not a Laurent polynomial")
        out = {}
        for i, c in enumerate(self._num.coeffs()):
            if c != 0:
                out[self._shift + i] = int(c)
        return out

    def _need_generic(self):
        if self.ctx.is_root:
            raise ContextMismatch("generic-mode accessor used on a root-mode scalar")

    def _key(self):
        if self.ctx.is_root:
            return (self.ctx, tuple(self._num.coeffs()))
        return (self.ctx, tuple(self._num.coeffs()), tuple(self._den.coeffs()), self._shift)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(str(c) for c in self._key()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ctx.is_root:
            return Scalar._raw_root(self.ctx, self._num + other._num)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = min(self._shift, other._shift)
        a = self._num.left_shift(self._shift - m)
        b = other._num.left_shift(other._shift - m)
        if self._den.is_one() and other._den.is_one():
            return Scalar._generic(self.ctx, a + b, _ONE_Z, m)
        return Scalar._generic(self.ctx, a * other._den + b * self._den, self._den * other._den, m)

    __radd__ = __add__

    def __neg__(self):
        if self.ctx.is_root:
            return Scalar._raw_root(self.ctx, -self._num)
        return Scalar._raw_generic(self.ctx, -self._num, self._den, self._shift)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ctx.is_root:
            return Scalar._root(self.ctx, self._num * other._num)
        if self.is_zero() or other.is_zero():
            return self.ctx.zero
        return Scalar._generic(self.ctx, self._num * other._num, self._den * other._den,
                               self._shift + other._shift)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.ctx.is_root:
            phi = _QPOLY(_cyclotomic(self.ctx.modulus))
            g, s, _ = self._num.xgcd(phi)
            return Scalar._root(self.ctx, s / g)
        return Scalar._generic(self.ctx, self._den, self._num, -self._shift)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if not self.ctx.is_root:
            if n == 0:
                return self.ctx.one
            return Scalar._raw_generic(self.ctx, self._num ** n, self._den ** n, self._shift * n)
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_omega(self, k):
        """Multiply by w^k (cheap in both backends)."""
        if k == 0 or self.is_zero():
            return self
        if self.ctx.is_root:
            return Scalar._root(self.ctx, self._num * _omega_powers(self.ctx.modulus)[k % self.ctx.modulus])
        return Scalar._raw_generic(self.ctx, self._num, self._den, self._shift + k)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if self.ctx.is_root:
            return _laurent_text(self.coefficients, 0)
        num = _laurent_text([int(c) for c in self._num.coeffs()], self._shift)
        if self._den.is_one():
            return num
        den = _laurent_text([int(c) for c in self._den.coeffs()], 0)
        return f"{_wrap(num)} / {_wrap(den)}"

    def __repr__(self):
        return f"Scalar[{self.ctx}]({self})"

    def is_atomic_text(self):
        """True when the rendering is a single token (no spaces)."""
        return " " not in str(self)


def _wrap(text):
    return text if " " not in text else f"({text})"


def _coef_text(c):
    c = Fraction(c)
    if c.denominator == 1 and c >= 0:
        return str(c.numerator)
    return f"({c})"


def _laurent_text(coeffs, shift):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = shift + i
        if e == 0:
            parts.append(_coef_text(c))
        elif c == 1:
            parts.append(f"w^{e}")
        else:
            parts.append(f"{_coef_text(c)}*w^{e}")
    return " + ".join(parts) if parts else "0"


def specialize(x, ctx):
    """Map a generic scalar into root context ``ctx`` (w -> primitive M-th root)."""
    if x.ctx.is_root or not ctx.is_root:
        raise ContextMismatch("specialize maps a generic scalar into a root context")
    num = Scalar._root(ctx, _QPOLY(x._num)).mul_omega(x._shift)
    den = Scalar._root(ctx, _QPOLY(x._den))
    if den.is_zero():
        raise UndefinedAtRoot(f"denominator of {x} vanishes at a primitive {ctx.modulus}-th root")
    return num / den


def cyclotomic_valuation(x, modulus):
    """Multiplicity of Phi_M(w) in the numerator minus that in the denominator (generic mode)."""
    if x.ctx.is_root:
        raise ContextMismatch("cyclotomic_valuation needs a generic scalar")
    if x.is_zero():
        raise ValueError("zero has no valuation")
    phi = _cyclotomic(modulus)

    def mult(poly):
        count = 0
        while True:
            quo, rem = divmod(poly, phi)
            if not rem.is_zero():
                return count
            poly, count = quo, count + 1

    return mult(x._num) - mult(x._den)


def choose_modulus(N, epsilon):
    """Root context where A^4 is a primitive N-th root and A^N = epsilon.

    epsilon = -1 gives M = 4N, epsilon = +1 gives M = 2N.
    """
    if not isinstance(N, int) or N < 3 or N % 2 == 0:
        raise InvalidN(f"N must be odd and >= 3, got {N!r}")
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    ctx = root_context(4 * N if epsilon == -1 else 2 * N)
    A = ctx.A()
    assert A ** N == ctx(epsilon)
    assert is_primitive_root(A ** 2, N) and is_primitive_root(A ** 4, N)
    iota = ctx.omega(N * N)
    assert iota ** 2 == (A ** (N * N)).inverse()
    return ctx


def omega_order(ctx, k):
    """Multiplicative order of w^k in a root context (w is a primitive M-th root)."""
    M = ctx.modulus
    return M // gcd(M, k % M) if k % M else 1


def is_primitive_root(x, n):
    """True iff x^n = 1 and x^d != 1 for every proper divisor d of n."""
    one = x.ctx.one
    if x ** n != one:
        return False
    return all(x ** d != one for d in range(1, n) if n % d == 0)


_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|(\^)|(\*)|(/)|(\+)|(-)|(\()|(\)))")


class _Parser:
    """Recursive-descent parser for the scalar text grammar (sums, products, powers of w)."""

    def __init__(self, text, ctx):
        self.ctx = ctx
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos} in {text!r}")
            kind = m.lastindex
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ParseError(f"unexpected token at {self.i}")
        tok = self.tokens[self.i][1]
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty scalar text")
        value = self.sum()
        if self.i != len(self.tokens):
            raise ParseError("trailing tokens in scalar text")
        return value

    def sum(self):
        value = self.product()
        while self.peek() in (6, 7):
            op = self.take(self.peek())
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self):
        value = self.unary()
        while self.peek() in (4, 5):
            op = self.take(self.peek())
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == 7:
            self.take(7)
            return -self.unary()
        return self.atom()

    def atom(self):
        kind = self.peek()
        if kind == 1:
            return self.ctx(int(self.take(1)))
        if kind == 2:
            self.take(2)
            if self.peek() == 3:
                self.take(3)
                sign = 1
                if self.peek() == 7:
                    self.take(7)
                    sign = -1
                return self.ctx.omega(sign * int(self.take(1)))
            return self.ctx.omega(1)
        if kind == 8:
            self.take(8)
            value = self.sum()
            self.take(9)
            return value
        raise ParseError(f"unexpected token at {self.i}")
