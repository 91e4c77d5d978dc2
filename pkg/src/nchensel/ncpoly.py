"""Polynomials over a local ring A in a central indeterminate x."""

from __future__ import annotations

from fractions import Fraction

from . import _text
from .errors import ContextMismatch, NotInIdealPower
from .fields import FieldElement
from .localring import LocalElement, canonical_lift, valuation
from .respoly import ResiduePoly


class LocalPoly:
    """sum_k a_k x^k with a_k in A/m^N, lowest degree first, no trailing zeros."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        out = []
        for c in coeffs:
            if not isinstance(c, LocalElement):
                c = canonical_lift(ring, ring.field(c))
            elif c.ctx is not ring and c.ctx != ring:
                raise ContextMismatch(f"{c.ctx} vs {ring}")
            out.append(c)
        while out and not out[-1]:
            out.pop()
        self.ring = ring
        self.coeffs = tuple(out)

    @classmethod
    def x(cls, ring):
        return cls(ring, [0, 1])

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def _coerce(self, other):
        if isinstance(other, LocalPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextMismatch(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (LocalElement, FieldElement, int, Fraction)):
            return LocalPoly(self.ring, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return LocalPoly(self.ring, [self[k] + o[k] for k in range(n)])

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LocalPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return LocalPoly(self.ring, [self[k] - o[k] for k in range(n)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, self)

    def __pow__(self, n):
        out = LocalPoly(self.ring, [1])
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def to_text(self, display=False):
        terms = [_text.term(c.to_text(display), _text.power("x", k))
                 for k, c in reversed(list(enumerate(self.coeffs))) if c]
        return _text.join_terms(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LocalPoly({self.ring}, {self})"

    def to_doc(self):
        """Lossless structured form: one list of field literals per x-power."""
        return [[str(c) for c in a.coeffs] for a in self.coeffs]

    @classmethod
    def from_doc(cls, ring, doc):
        return cls(ring, [LocalElement(ring, [ring.field(str(c)) for c in series]) for series in doc])


def _mul(a, b):
    if not a.coeffs or not b.coeffs:
        return LocalPoly(a.ring, [])
    out = [a.ring.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return LocalPoly(a.ring, out)


def lpoly_arith(op, a, b):
    op = op.upper()
    if op == "ADD":
        return a + b
    if op == "SUB":
        return a - b
    if op == "MUL":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def lift_poly(g, ring):
    """Coefficientwise canonical lift of a k[x] polynomial into A[x]."""
    return LocalPoly(ring, [canonical_lift(ring, c) for c in g.coeffs])


def reduce_poly(f):
    return ResiduePoly(f.ring.field, [c.coeffs[0] for c in f.coeffs])


def right_evaluate(f, a):
    """f(a) = sum_k f_k * a^k, coefficients multiplied on the left."""
    if a.ctx != f.ring:
        raise ContextMismatch(f"{a.ctx} vs {f.ring}")
    out = f.ring.zero
    for c in reversed(f.coeffs):
        out = out * a + c
    return out


def right_divmod(f, a):
    """Synthetic division ``f = g*(x - a) + rem`` with ``rem`` a constant."""
    if a.ctx != f.ring:
        raise ContextMismatch(f"{a.ctx} vs {f.ring}")
    ring = f.ring
    n = f.degree()
    if n <= 0:
        return LocalPoly(ring, []), f[0]
    g = [ring.zero] * n
    g[n - 1] = f.coeffs[n]
    for k in range(n - 1, 0, -1):
        g[k - 1] = f.coeffs[k] + g[k] * a
    rem = f.coeffs[0] + g[0] * a
    return LocalPoly(ring, g), rem


def coeff_valuation_floor(f):
    """Largest r with f in m^r[x]; N for the zero polynomial."""
    return min((valuation(c) for c in f.coeffs), default=f.ring.precision)


def leading_form(h, r):
    """Image of h in (m^r/m^(r+1))[x], read off as the pi^r coefficients."""
    if r >= h.ring.precision:
        raise NotInIdealPower(f"stage {r} is beyond the working precision {h.ring.precision}")
    if coeff_valuation_floor(h) < r:
        raise NotInIdealPower(f"{h} is not in m^{r}[x]")
    return ResiduePoly(h.ring.field, [c.coeffs[r] for c in h.coeffs])


def shift_into_ideal(g, r, ring):
    """Section of :func:`leading_form`: each coefficient c becomes c*pi^r."""
    field = ring.field
    out = []
    for c in g.coeffs:
        series = [field.zero] * ring.precision
        if r < ring.precision:
            series[r] = c
        out.append(LocalElement._raw(ring, series))
    return LocalPoly(ring, out)
