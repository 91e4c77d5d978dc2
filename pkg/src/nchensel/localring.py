"""Truncated arithmetic in local rings A with principal maximal ideal m = (pi).

Three kinds are supported:

* ``COMMUTATIVE_SERIES``: k[[t]], pi = t central.
* ``VOLTERRA``: k[[d^-1]] over a differential field, with
  ``d^-m c = sum_i binom(-m, i) c^(i) d^-(m+i)``.
* ``TWISTED``: k[[tau; sigma]] with ``tau c = sigma(c) tau``.

Elements are stored as ``sum_j c_j pi^j`` with the coefficients on the left
of the generator powers, and all arithmetic is exact modulo m^N for the
precision N fixed by the context.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from . import _text
from .errors import ContextMismatch, NotAUnit
from .fields import FieldContext, FieldElement, generalized_binomial


class RingKind(enum.Enum):
    COMMUTATIVE_SERIES = "series"
    VOLTERRA = "volterra"
    TWISTED = "twisted"


_DEFAULT_GENERATOR = {
    RingKind.COMMUTATIVE_SERIES: "t",
    RingKind.VOLTERRA: "∂⁻¹",
    RingKind.TWISTED: "τ",
}


@dataclass(frozen=True)
class LocalRingContext:
    kind: RingKind
    field: FieldContext
    precision: int
    generator: str = ""

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if self.kind is RingKind.VOLTERRA and self.field.derivation is None:
            raise ValueError("a Volterra ring needs a coefficient field with a derivation")
        if self.kind is RingKind.TWISTED and self.field.automorphism is None:
            raise ValueError("a twisted ring needs a coefficient field with an automorphism")
        if not self.generator:
            object.__setattr__(self, "generator", _DEFAULT_GENERATOR[self.kind])

    def with_precision(self, n):
        return replace(self, precision=n)

    def element(self, coeffs):
        return LocalElement(self, coeffs)

    @property
    def zero(self):
        return LocalElement(self, ())

    @property
    def one(self):
        return LocalElement(self, (1,))

    @property
    def pi(self):
        """The generator of the maximal ideal."""
        return LocalElement(self, (0, 1))

    def lift(self, a):
        return canonical_lift(self, a)

    def gen_power_text(self, j, display=False):
        if not display:
            return _text.power("g", j)
        if j == 0:
            return ""
        if self.kind is RingKind.VOLTERRA:
            return "∂" + _text.superscript(-j)
        return _text.power(self.generator, j)

    def __str__(self):
        return f"{self.kind.value}({self.field}, N={self.precision})"


class LocalElement:
    """Truncated series sum_j c_j pi^j with exactly N coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        n = ctx.precision
        coeffs = [ctx.field(c) for c in list(coeffs)[:n]]
        coeffs += [ctx.field.zero] * (n - len(coeffs))
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, ctx, coeffs):
        out = cls.__new__(cls)
        out.ctx = ctx
        out.coeffs = tuple(coeffs)
        return out

    def _coerce(self, other):
        if isinstance(other, LocalElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx} vs {self.ctx}")
            return other
        if isinstance(other, (FieldElement, int, Fraction)):
            return canonical_lift(self.ctx, self.ctx.field(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LocalElement._raw(self.ctx, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LocalElement._raw(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LocalElement._raw(self.ctx, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return elem_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return elem_mul(o, self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else elem_inv(self)
        out = self.ctx.one
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self):
        return elem_inv(self)

    def valuation(self):
        return valuation(self)

    def residue(self):
        return self.coeffs[0]

    def is_unit(self):
        return bool(self.coeffs[0])

    def __getitem__(self, j):
        return self.coeffs[j]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def to_text(self, display=False):
        terms = [_text.term(str(c), self.ctx.gen_power_text(j, display))
                 for j, c in enumerate(self.coeffs) if c]
        return _text.join_terms(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LocalElement({self.ctx}, {self})"


def _check(a, b):
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx} vs {b.ctx}")


def _automorphism_power(field, c, m):
    for _ in range(m):
        c = field.apply_automorphism(c)
    return c


def elem_mul(a, b):
    """Product a*b in A/m^N, moving pi-powers of ``a`` past coefficients of ``b``."""
    _check(a, b)
    ctx = a.ctx
    field = ctx.field
    n = ctx.precision
    out = [field.zero] * n
    kind = ctx.kind
    derivs = {}
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(n - i):
            bj = b.coeffs[j]
            if not bj:
                continue
            if kind is RingKind.COMMUTATIVE_SERIES or i == 0:
                out[i + j] = out[i + j] + ai * bj
            elif kind is RingKind.TWISTED:
                out[i + j] = out[i + j] + ai * _automorphism_power(field, bj, i)
            else:
                # pi^i * bj = sum_l binom(-i, l) * bj^(l) * pi^(i+l)
                ders = derivs.get(j)
                if ders is None:
                    ders = [bj]
                    for _ in range(n - 1 - j):
                        ders.append(field.apply_derivation(ders[-1]))
                    derivs[j] = ders
                for l in range(n - i - j):
                    d = ders[l]
                    if d:
                        out[i + j + l] = out[i + j + l] + ai * generalized_binomial(-i, l) * d
    return LocalElement._raw(ctx, out)


def elem_add(a, b):
    return a + b


def elem_sub(a, b):
    return a - b


def elem_neg(a):
    return -a


def elem_inv(a):
    """Two-sided inverse of a unit, solved one coefficient at a time."""
    ctx = a.ctx
    c0 = a.coeffs[0]
    if not c0:
        raise NotAUnit(f"{a} lies in the maximal ideal")
    inv0 = c0.inverse()
    v = [inv0] + [ctx.field.zero] * (ctx.precision - 1)
    for j in range(1, ctx.precision):
        # coefficient j of a*v is c0*v_j + (terms fixed by v_0..v_{j-1})
        partial = elem_mul(a, LocalElement._raw(ctx, v)).coeffs[j]
        v[j] = -(inv0 * partial)
    return LocalElement._raw(ctx, v)


def reduce_to_residue(a):
    return a.coeffs[0]


def canonical_lift(ctx, a):
    field = ctx.field
    return LocalElement._raw(ctx, [field(a)] + [field.zero] * (ctx.precision - 1))


def valuation(a):
    for j, c in enumerate(a.coeffs):
        if c:
            return j
    return a.ctx.precision


@dataclass(frozen=True)
class ProbeResult:
    almost_commutative: bool
    witness: FieldElement | None = None
    commutator: LocalElement | None = None

    def __bool__(self):
        return self.almost_commutative


def is_almost_commutative_probe(ctx, samples):
    """Check that pi commutes with lifted coefficients modulo m^2.

    Returns a :class:`ProbeResult`; on failure it names the first sample whose
    commutator ``pi*a - a*pi`` has valuation below 2.
    """
    if not samples:
        raise ValueError("the probe needs at least one sample")
    # m^2 must be visible, whatever precision the caller works at
    ctx = ctx.with_precision(max(ctx.precision, 3))
    pi = ctx.pi
    for s in samples:
        a = canonical_lift(ctx, s)
        comm = pi * a - a * pi
        if valuation(comm) < 2:
            return ProbeResult(False, ctx.field(s), comm)
    return ProbeResult(True)
