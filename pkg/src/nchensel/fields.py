"""Exact coefficient fields: Q, GF(p), Q(i) and rational functions over them.

Every field is described by an immutable context object.  A context may
carry an automorphism (``"identity"`` or ``"conjugation"``) and a derivation
(``"zero"`` or ``"d/d<var>"``); the twisted and Volterra rings built on top
of a field read these to implement their commutation rules.

Elements are :class:`FieldElement` instances holding a canonical
representation, so ``==`` is plain representation equality.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import _dense, _text
from .errors import ContextMismatch, DivisionByZero, NoAutomorphism, NoDerivation

IDENTITY = "identity"
CONJUGATION = "conjugation"
ZERO_DERIVATION = "zero"


class FieldKind(enum.Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "GF"
    GAUSSIAN_RATIONALS = "Qi"
    RATIONAL_FUNCTIONS = "RatFunc"


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def generalized_binomial(n, i):
    """n(n-1)...(n-i+1)/i! for any integer n; exact integer arithmetic."""
    if i < 0:
        raise ValueError("i must be non-negative")
    num = 1
    for k in range(i):
        num *= n - k
    return num // math.factorial(i)


class FieldElement:
    __slots__ = ("ctx", "rep")

    def __init__(self, ctx, rep, canonical=False):
        self.ctx = ctx
        self.rep = rep if canonical else ctx._canon(rep)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx} vs {self.ctx}")
            return other.rep
        if isinstance(other, (int, Fraction)):
            return self.ctx._from_fraction(Fraction(other))
        return None

    def _wrap(self, rep):
        return FieldElement(self.ctx, rep, canonical=True)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ctx._add(self.rep, o))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.ctx._neg(self.rep))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ctx._add(self.rep, self.ctx._neg(o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ctx._add(o, self.ctx._neg(self.rep)))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ctx._mul(self.rep, o))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero(f"inverse of zero in {self.ctx}")
        return self._wrap(self.ctx._inv(self.rep))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * self._wrap(o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(o) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = self.ctx.one
        for _ in range(abs(n)):
            out = out * base
        return out

    def __bool__(self):
        return not self.ctx._is_zero(self.rep)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.rep == o

    def __hash__(self):
        return hash((self.ctx, self.rep))

    def __str__(self):
        return self.ctx._fmt(self.rep)

    def __repr__(self):
        return f"{self.ctx}({self})"


@dataclass(frozen=True)
class FieldContext:
    """Common behaviour; concrete fields are the subclasses below."""

    def __post_init__(self):
        auto = getattr(self, "automorphism", None)
        der = getattr(self, "derivation", None)
        if auto not in (None, IDENTITY, CONJUGATION):
            raise ValueError(f"unknown automorphism {auto!r}")
        if auto == CONJUGATION and not isinstance(self, GaussianRationals):
            raise ValueError("conjugation is only available on Qi")
        if der not in (None, ZERO_DERIVATION) and der != self._derivation_name():
            raise ValueError(f"derivation {der!r} is not available on {self}")

    def _derivation_name(self):
        return None

    # -- construction -----------------------------------------------------

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ContextMismatch(f"{value.ctx} vs {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, self._from_fraction(Fraction(value)), canonical=True)
        if isinstance(value, str):
            from .parsing import parse_field_element

            return parse_field_element(value, self)
        raise TypeError(f"cannot convert {value!r} into {self}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def symbols(self):
        """Names usable in text input for this field's generators."""
        return {}

    def with_structure(self, automorphism=None, derivation=None):
        return replace(self, automorphism=automorphism, derivation=derivation)

    # -- structure maps ---------------------------------------------------

    def apply_automorphism(self, a):
        if self.automorphism is None:
            raise NoAutomorphism(f"{self} carries no automorphism")
        if self.automorphism == IDENTITY:
            return a
        return FieldElement(self, self._conj(a.rep), canonical=True)

    def apply_derivation(self, a, order=1):
        if self.derivation is None:
            raise NoDerivation(f"{self} carries no derivation")
        if order < 0:
            raise ValueError("derivation order must be non-negative")
        if order == 0:
            return a
        if self.derivation == ZERO_DERIVATION:
            return self.zero
        rep = a.rep
        for _ in range(order):
            rep = self._deriv(rep)
        return FieldElement(self, rep, canonical=True)


@dataclass(frozen=True)
class Rationals(FieldContext):
    automorphism: str | None = None
    derivation: str | None = None

    kind = FieldKind.RATIONALS

    def _canon(self, rep):
        return Fraction(rep)

    def _from_fraction(self, q):
        return q

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _fmt(self, a):
        return str(a)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(FieldContext):
    p: int = 2
    automorphism: str | None = None
    derivation: str | None = None

    kind = FieldKind.PRIME_FIELD

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")
        super().__post_init__()

    def _canon(self, rep):
        return int(rep) % self.p

    def _from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"{q} has no image in GF({self.p})")
        return q.numerator * pow(den, -1, self.p) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _fmt(self, a):
        return str(a)

    def elements(self):
        return [FieldElement(self, v, canonical=True) for v in range(self.p)]

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class GaussianRationals(FieldContext):
    """Q(i), standing in exactly for the complex numbers."""

    automorphism: str | None = None
    derivation: str | None = None

    kind = FieldKind.GAUSSIAN_RATIONALS

    def _canon(self, rep):
        if isinstance(rep, tuple):
            return (Fraction(rep[0]), Fraction(rep[1]))
        return (Fraction(rep), Fraction(0))

    def _from_fraction(self, q):
        return (q, Fraction(0))

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        return (a[0] / n, -a[1] / n)

    def _is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def _conj(self, a):
        return (a[0], -a[1])

    def _fmt(self, a):
        re, im = a
        terms = []
        if re:
            terms.append(str(re))
        if im:
            terms.append(_text.term(str(im), "i"))
        return _text.join_terms(terms)

    def symbols(self):
        return {"i": FieldElement(self, (Fraction(0), Fraction(1)), canonical=True)}

    def __str__(self):
        return "Qi"


_COPRIME_PRIME = 2 ** 61 - 1


def _coprime_mod_prime(num, den):
    """True when num and den (over Q) are certainly coprime, tested modulo a large prime.

    A False answer only means the cheap test was inconclusive.
    """
    p = _COPRIME_PRIME
    a, b = [], []
    for src, dst in ((num, a), (den, b)):
        for c in src:
            q = c.rep
            if q.denominator % p == 0:
                return False
            dst.append(q.numerator * pow(q.denominator, -1, p) % p)
        if dst[-1] == 0:
            return False
    # degrees are preserved mod p, so a constant gcd mod p means a constant gcd over Q
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for k, bk in enumerate(b):
                a[shift + k] = (a[shift + k] - c * bk) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) == 1


@dataclass(frozen=True)
class RationalFunctions(FieldContext):
    """base(var): reduced fractions num/den of base[var] polynomials, den monic."""

    base: FieldContext = Rationals()
    var: str = "t"
    automorphism: str | None = None
    derivation: str | None = None

    kind = FieldKind.RATIONAL_FUNCTIONS

    def __post_init__(self):
        if isinstance(self.base, RationalFunctions):
            raise ValueError("nested rational function fields are not supported")
        if not self.var.isidentifier() or self.var in ("x", "g", "i"):
            raise ValueError(f"invalid rational function variable {self.var!r}")
        super().__post_init__()

    def _derivation_name(self):
        return f"d/d{self.var}"

    def _gcd(self, a, b):
        if not a or not b:
            return _dense.gcd(a, b)
        if len(a) == 1 or len(b) == 1:
            return [self.base.one]
        if isinstance(self.base, Rationals) and _coprime_mod_prime(a, b):
            return [self.base.one]
        return _dense.gcd(a, b)

    def _cancel(self, a, b):
        """a/g, b/g for g = gcd(a, b)."""
        g = self._gcd(a, b)
        if len(g) == 1:
            return a, b
        return _dense.divmod_(a, g)[0], _dense.divmod_(b, g)[0]

    def _normalize(self, num, den):
        """Make den monic; num and den must already be coprime."""
        if not num:
            return ((), (self.base.one,))
        lc = den[-1]
        if lc != 1:
            inv = lc.inverse()
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        return (tuple(num), tuple(den))

    def _canon(self, rep):
        if not isinstance(rep, tuple):
            rep = ((self.base(rep),), (self.base.one,))
        num = _dense.trim(self.base(c) for c in rep[0])
        den = _dense.trim(self.base(c) for c in rep[1])
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            return ((), (self.base.one,))
        return self._normalize(*self._cancel(num, den))

    def _from_fraction(self, q):
        if q == 0:
            return ((), (self.base.one,))
        return ((self.base(q),), (self.base.one,))

    def _add(self, a, b):
        # same scheme as fractions.Fraction: only the gcd with g can cancel
        (an, ad), (bn, bd) = a, b
        g = self._gcd(ad, bd)
        if len(g) == 1:
            num = _dense.add(_dense.mul(an, bd), _dense.mul(bn, ad))
            return self._normalize(num, _dense.mul(ad, bd))
        ad_g = _dense.divmod_(ad, g)[0]
        bd_g = _dense.divmod_(bd, g)[0]
        num = _dense.add(_dense.mul(an, bd_g), _dense.mul(bn, ad_g))
        num, g2 = self._cancel(num, g)
        return self._normalize(num, _dense.mul(_dense.mul(ad_g, g2), bd_g))

    def _neg(self, a):
        return (tuple(_dense.neg(a[0])), a[1])

    def _mul(self, a, b):
        (an, ad), (bn, bd) = a, b
        if not an or not bn:
            return ((), (self.base.one,))
        an, bd = self._cancel(an, bd)
        bn, ad = self._cancel(bn, ad)
        return self._normalize(_dense.mul(an, bn), _dense.mul(ad, bd))

    def _inv(self, a):
        return self._canon((a[1], a[0]))

    def _is_zero(self, a):
        return not a[0]

    def _deriv(self, a):
        num, den = list(a[0]), list(a[1])
        top = _dense.sub(_dense.mul(_dense.derivative(num), den),
                         _dense.mul(num, _dense.derivative(den)))
        return self._canon((top, _dense.mul(den, den)))

    def _fmt_poly(self, coeffs):
        terms = [_text.term(str(c), _text.power(self.var, k))
                 for k, c in reversed(list(enumerate(coeffs))) if c]
        return _text.join_terms(terms)

    def _fmt(self, a):
        num = self._fmt_poly(a[0])
        if len(a[1]) == 1:
            return num
        den = self._fmt_poly(a[1])
        if not _text.is_atomic(num):
            num = f"({num})"
        return f"{num}/({den})"

    def from_poly(self, num, den=(1,)):
        return FieldElement(self, (tuple(num), tuple(den)))

    def symbols(self):
        out = {k: self.from_poly([v]) for k, v in self.base.symbols().items()}
        out[self.var] = self.from_poly([0, 1])
        return out

    def __str__(self):
        return f"RatFunc({self.base},{self.var})"


def field_arith(op, a, b=None):
    """Dispatch one of ADD, SUB, MUL, DIV, NEG, INV on field elements."""
    op = op.upper()
    if op == "NEG":
        return -a
    if op == "INV":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "ADD":
        return a + b
    if op == "SUB":
        return a - b
    if op == "MUL":
        return a * b
    if op == "DIV":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def apply_automorphism(ctx, a):
    return ctx.apply_automorphism(a)


def apply_derivation(ctx, a, order=1):
    return ctx.apply_derivation(a, order)


def random_element(ctx, rng, size=3):
    """A random element with small numerators, denominators and degrees."""
    if isinstance(ctx, PrimeField):
        return ctx(rng.randrange(ctx.p))

    def small():
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    if isinstance(ctx, Rationals):
        return ctx(small())
    if isinstance(ctx, GaussianRationals):
        return FieldElement(ctx, (small(), small()))
    num = [random_element(ctx.base, rng, size) for _ in range(rng.randint(0, size))]
    den = [random_element(ctx.base, rng, size) for _ in range(rng.randint(0, 2))] + [ctx.base.one]
    return ctx.from_poly(num, den)
