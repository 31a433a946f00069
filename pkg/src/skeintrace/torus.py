"""The Chekhov-Fock quantum torus in its Weyl-ordered monomial basis.

Generators satisfy Z_i Z_j = q^(2 sigma_ij) Z_j Z_i where q is the commutation
scalar w^param (param = 1 for the w-algebra, N^2 for the iota-algebra).  The Weyl
monomial [Z^a] = q^(-sum_{u<v} a_u a_v sigma_uv) Z_1^a_1 ... Z_n^a_n multiplies as

    [Z^a] [Z^b] = q^<a,b> [Z^(a+b)],   <a,b> = sum_ij sigma_ij a_i b_j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .errors import ContextMismatch, ParseError
from .scalar import GENERIC_CONTEXT, Scalar, ScalarContext


@dataclass(frozen=True)
class TorusContext:
    sigma: tuple
    scalars: ScalarContext = GENERIC_CONTEXT
    param: int = 1
    names: tuple | None = None

    def __post_init__(self):
        sigma = tuple(tuple(int(x) for x in row) for row in self.sigma)
        n = len(sigma)
        if any(len(row) != n for row in sigma):
            raise ValueError("sigma must be square")
        for i in range(n):
            for j in range(n):
                if sigma[i][j] != -sigma[j][i]:
                    raise ValueError("sigma must be antisymmetric")
        object.__setattr__(self, "sigma", sigma)
        names = self.names if self.names is not None else tuple(f"Z{i + 1}" for i in range(n))
        if len(names) != n:
            raise ValueError("one generator name per row of sigma")
        object.__setattr__(self, "names", tuple(names))

    @property
    def rank(self):
        return len(self.sigma)

    def with_param(self, param):
        return replace(self, param=param)

    def with_scalars(self, scalars):
        return replace(self, scalars=scalars)

    def pairing(self, a, b):
        s = self.sigma
        return sum(s[i][j] * a[i] * b[j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j])

    def zero(self):
        return TorusElement(self, {})

    def one(self):
        return self.monomial((0,) * self.rank)

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.rank:
            raise ValueError("exponent vector has the wrong length")
        coeff = self.scalars(coeff)
        return TorusElement(self, {exps: coeff} if coeff else {})

    def generator(self, i, power=1):
        exps = [0] * self.rank
        exps[i] = power
        return self.monomial(exps)

    def from_ordered(self, word, coeff=1):
        """Convert a raw ordered product [(generator, power), ...] to the Weyl basis."""
        result = self.one() * self.scalars(coeff)
        for i, power in word:
            result = result * self.generator(i, power)
        return result

    def parse(self, text):
        return _parse_element(self, text)


class TorusElement:
    """Finite sum of Weyl monomials with nonzero scalar coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def _check(self, other):
        if other.ctx != self.ctx:
            raise ContextMismatch("torus elements from different contexts")

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.ctx.one() * other
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TorusElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.ctx.scalars(c)
        return TorusElement(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        self._check(other)
        return weyl_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("only nonnegative powers of torus elements")
        result = self.ctx.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ctx.scalars.zero)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"TorusElement({self})"


def weyl_product(x, y):
    """Bilinear extension of [Z^a][Z^b] = q^<a,b> [Z^(a+b)]."""
    if x.ctx != y.ctx:
        raise ContextMismatch("torus elements from different contexts")
    ctx = x.ctx
    sigma, param, n = ctx.sigma, ctx.param, ctx.rank
    out = {}
    ys = list(y.terms.items())
    for a, ca in x.terms.items():
        row = [sum(a[i] * sigma[i][j] for i in range(n) if a[i]) for j in range(n)]
        for b, cb in ys:
            e = param * sum(row[j] * b[j] for j in range(n) if b[j])
            c = (ca * cb).mul_omega(e)
            key = tuple(a[i] + b[i] for i in range(n))
            out[key] = out[key] + c if key in out else c
    return TorusElement(ctx, out)


def eval_poly_at(P, x):
    """P(x) by Horner's scheme; the constant term multiplies [Z^0]."""
    one = x.ctx.one()
    coeffs = P.coeffs
    if not coeffs:
        return x.ctx.zero()
    result = one * coeffs[-1]
    for c in reversed(coeffs[:-1]):
        result = result * x
        if c:
            result = result + one * c
    return result


def frobenius(x, N):
    """The map [Z^a] -> [Z^(N a)] from the iota-algebra (param N^2) to the w-algebra."""
    if x.ctx.param != N * N:
        raise ContextMismatch(f"frobenius expects commutation parameter w^{N * N}, got w^{x.ctx.param}")
    target = x.ctx.with_param(1)
    return TorusElement(target, {tuple(N * e for e in k): v for k, v in x.terms.items()})


def commutes(x, y):
    return (x * y - y * x).is_zero()


def _monomial_text(ctx, exps):
    parts = [f"{ctx.names[i]}^{e}" for i, e in enumerate(exps) if e]
    return "[" + " ".join(parts) + "]"


def render(x):
    """Canonical text: terms sorted by exponent vector, coefficient 1 omitted."""
    if x.is_zero():
        return "0"
    out = []
    for exps, c in x.sorted_terms():
        mono = _monomial_text(x.ctx, exps)
        if c == 1:
            out.append(mono)
        else:
            text = str(c)
            out.append(f"{text if ' ' not in text else '(' + text + ')'} * {mono}")
    return " + ".join(out)


def _split_top(text, sep):
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


_FACTOR = re.compile(r"^(\S+)\^(-?\d+)$")


def _parse_element(ctx, text):
    text = text.strip()
    if text == "0":
        return ctx.zero()
    index = {name: i for i, name in enumerate(ctx.names)}
    result = ctx.zero()
    for term in _split_top(text, " + "):
        term = term.strip()
        pieces = _split_top(term, " * ")
        mono = pieces[-1].strip()
        coeff = ctx.scalars.parse(" * ".join(pieces[:-1])) if len(pieces) > 1 else ctx.scalars.one
        if not (mono.startswith("[") and mono.endswith("]")):
            raise ParseError(f"bad monomial {mono!r}")
        exps = [0] * ctx.rank
        for factor in mono[1:-1].split():
            m = _FACTOR.match(factor)
            if not m or m.group(1) not in index:
                raise ParseError(f"bad factor {factor!r}")
            exps[index[m.group(1)]] += int(m.group(2))
        result = result + ctx.monomial(exps, coeff)
    return result
