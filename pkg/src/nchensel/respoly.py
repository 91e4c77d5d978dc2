"""Univariate polynomials over a (commutative) residue field k."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import _dense, _text
from .errors import ContextMismatch, DegreeTooLarge, DivisionByZero, NotCoprime, UnsupportedField
from .fields import FieldElement, PrimeField

# trial division enumerates at most this many monic candidates per degree
_TRIAL_LIMIT = 200_000


class ResiduePoly:
    """Dense polynomial over a field, lowest degree first.

    The zero polynomial has degree -1.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        self.ctx = ctx
        self.coeffs = tuple(_dense.trim(ctx(c) for c in coeffs))

    @classmethod
    def _raw(cls, ctx, coeffs):
        out = cls.__new__(cls)
        out.ctx = ctx
        out.coeffs = tuple(coeffs)
        return out

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ctx.zero

    def __iter__(self):
        return iter(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, ResiduePoly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx} vs {self.ctx}")
            return other
        if isinstance(other, (FieldElement, int, Fraction)):
            return ResiduePoly(self.ctx, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResiduePoly._raw(self.ctx, _dense.add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return ResiduePoly._raw(self.ctx, _dense.neg(self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResiduePoly._raw(self.ctx, _dense.sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResiduePoly._raw(self.ctx, _dense.mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ResiduePoly(self.ctx, [1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q, r = _dense.divmod_(self.coeffs, o.coeffs)
        return ResiduePoly._raw(self.ctx, q), ResiduePoly._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, r):
        return _dense.evaluate(self.coeffs, r, self.ctx.zero)

    def derivative(self):
        return ResiduePoly._raw(self.ctx, _dense.derivative(self.coeffs))

    def monic(self):
        return ResiduePoly._raw(self.ctx, _dense.monic(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def to_text(self, var="x"):
        terms = [_text.term(str(c), _text.power(var, k))
                 for k, c in reversed(list(enumerate(self.coeffs))) if c]
        return _text.join_terms(terms)

    __str__ = to_text

    def __repr__(self):
        return f"ResiduePoly({self.ctx}, {self})"


def rpoly_arith(op, a, b):
    op = op.upper()
    if op == "ADD":
        return a + b
    if op == "SUB":
        return a - b
    if op == "MUL":
        return a * b
    if op == "DIVMOD":
        if not b:
            raise DivisionByZero("polynomial division by zero")
        return divmod(a, b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def extended_euclid(a, b):
    """Return ``(g, u, v)`` with ``g = gcd(a, b)`` monic and ``u*a + v*b == g``."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    g, u, v = _dense.xgcd(a.coeffs, b.coeffs, a.ctx.one)
    ctx = a.ctx
    return ResiduePoly._raw(ctx, g), ResiduePoly._raw(ctx, u), ResiduePoly._raw(ctx, v)


def gcd(a, b):
    return ResiduePoly._raw(a.ctx, _dense.gcd(a.coeffs, b.coeffs))


def bezout_solve_constrained(f1, f2, c):
    """Solve ``f2*G1 + f1*G2 == c`` with ``deg G1 < deg f1``, ``deg G2 < deg f2``.

    ``f1`` and ``f2`` must be monic and coprime, and ``deg c < deg f1 + deg f2``;
    under these conditions the solution is unique.
    """
    if c.degree() >= f1.degree() + f2.degree():
        raise DegreeTooLarge(
            f"deg c = {c.degree()} >= deg f1 + deg f2 = {f1.degree() + f2.degree()}")
    g, u, v = extended_euclid(f1, f2)
    if g != 1:
        raise NotCoprime(f"gcd({f1}, {f2}) = {g}")
    g1 = (v * c) % f1
    g2, rem = divmod(c - f2 * g1, f1)
    assert not rem
    return g1, g2


def is_simple_root(f, r):
    return f(r) == 0 and f.derivative()(r) != 0


def _powmod(a, e, m):
    out = ResiduePoly(a.ctx, [1]) % m
    a = a % m
    while e:
        if e & 1:
            out = (out * a) % m
        a = (a * a) % m
        e >>= 1
    return out


def _monic_polys(ctx, d):
    field = ctx.elements()
    for tail in itertools.product(field, repeat=d):
        yield ResiduePoly._raw(ctx, list(tail) + [ctx.one])


def _equal_degree_split(h, d, rng):
    # h: squarefree product of irreducibles of degree d, p odd
    ctx = h.ctx
    if h.degree() == d:
        return [h]
    e = (ctx.p ** d - 1) // 2
    while True:
        a = ResiduePoly(ctx, [rng.randrange(ctx.p) for _ in range(h.degree())])
        if a.degree() < 1:
            continue
        s = gcd(h, _powmod(a, e, h) - 1)
        if 0 < s.degree() < h.degree():
            return _equal_degree_split(s, d, rng) + _equal_degree_split(h // s, d, rng)


def _irreducibles_of_degree(h, d):
    ctx = h.ctx
    if h.degree() == d:
        return [h]
    if ctx.p ** d <= _TRIAL_LIMIT:
        found, total = [], 0
        for m in _monic_polys(ctx, d):
            if not h % m:
                found.append(m)
                total += d
                if total == h.degree():
                    break
        return found
    return _equal_degree_split(h, d, random.Random(0))


def factor_primepowers(f):
    """Split a monic polynomial over a small prime field into prime-power blocks.

    Returns ``[(q**e, e), ...]`` with ``q`` monic irreducible, sorted by ``q``.
    """
    ctx = f.ctx
    if not isinstance(ctx, PrimeField):
        raise UnsupportedField(f"factorization over {ctx} is not supported; supply the factors")
    if ctx.p > 101 or f.degree() > 12:
        raise UnsupportedField("factor_primepowers is limited to p <= 101 and degree <= 12")
    if not f.is_monic():
        raise ValueError("factor_primepowers expects a monic polynomial")
    x = ResiduePoly.x(ctx)
    rem = f
    found = []
    d = 1
    while rem.degree() > 0:
        if 2 * d > rem.degree():
            irreducibles = [rem]
        else:
            # factors of degree < d are gone, so h is a product of distinct degree-d irreducibles
            xq = x
            for _ in range(d):
                xq = _powmod(xq, ctx.p, rem)
            h = gcd(rem, xq - x)
            irreducibles = _irreducibles_of_degree(h, d) if h.degree() > 0 else []
        for q in irreducibles:
            e = 0
            while True:
                quo, r = divmod(rem, q)
                if r:
                    break
                rem, e = quo, e + 1
            found.append((q, e))
        d += 1
    found.sort(key=lambda qe: (qe[0].degree(), [c.rep for c in qe[0]]))
    return [(q ** e, e) for q, e in found]
