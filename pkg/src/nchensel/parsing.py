"""Text input: field specs, ring specs and polynomial expressions.

Expressions use ``+ - * / ^`` (``**`` also accepted), parentheses, integer
literals and names.  A number directly followed by a name or a parenthesis
is an implicit product, so ``2i`` and ``3t^2`` work.  Multiplication keeps
operand order, which matters in the non-commutative rings: ``g*t`` and
``t*g`` differ in a Volterra ring.

Names: ``x`` is the polynomial indeterminate, ``g`` the generator of the
maximal ideal, ``i`` the imaginary unit of Qi, and a rational function
field's variable stands for itself.
"""

from __future__ import annotations

import re

from .errors import HenselError, ParseError
from .fields import (CONJUGATION, IDENTITY, ZERO_DERIVATION, GaussianRationals, PrimeField,
                     Rationals, RationalFunctions)
from .localring import LocalElement, LocalRingContext, RingKind
from .ncpoly import LocalPoly
from .respoly import ResiduePoly

DEFAULT_PRECISION = 8

_TOKEN = re.compile(r"\s*(?:(\d+)|([^\W\d]\w*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def is_op(self, *ops):
        tok = self.peek()
        return tok[0] == "op" and tok[1] in ops

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.is_op("+", "-"):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if self.is_op("*"):
                self.take()
                node = ("mul", node, self.unary())
            elif self.is_op("/"):
                self.take()
                node = ("div", node, self.unary(), tok[2])
            elif tok[0] in ("num", "name") or self.is_op("("):
                node = ("mul", node, self.unary())
            else:
                return node

    def unary(self):
        if self.is_op("-"):
            self.take()
            return ("neg", self.unary())
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.is_op("^"):
            tok = self.take()
            sign = 1
            if self.is_op("-"):
                self.take()
                sign = -1
            exp = self.take()
            if exp[0] != "num":
                raise self.error("exponent must be an integer literal", exp)
            node = ("pow", node, sign * exp[1], tok[2])
        return node

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return ("num", tok[1])
        if tok[0] == "name":
            return ("name", tok[1], tok[2])
        if tok[0] == "op" and tok[1] == "(":
            node = self.expr()
            if not self.is_op(")"):
                raise self.error("expected ')'")
            self.take()
            return node
        raise self.error("expected a number, a name or '('", tok)


def parse_expression(text):
    return _Parser(text).parse()


def _evaluate(node, text, const, symbols, divide):
    def ev(n):
        kind = n[0]
        if kind == "num":
            return const(n[1])
        if kind == "name":
            if n[1] not in symbols:
                raise ParseError(f"unknown name {n[1]!r}", text, n[2])
            return symbols[n[1]]
        if kind == "neg":
            return -ev(n[1])
        if kind == "add":
            return ev(n[1]) + ev(n[2])
        if kind == "sub":
            return ev(n[1]) - ev(n[2])
        if kind == "mul":
            return ev(n[1]) * ev(n[2])
        if kind == "div":
            try:
                return divide(ev(n[1]), ev(n[2]))
            except (HenselError, ZeroDivisionError) as e:
                raise ParseError(f"invalid division ({e})", text, n[3]) from None
        if kind == "pow":
            base, e = ev(n[1]), n[2]
            out = const(1)
            for _ in range(abs(e)):
                out = out * base
            if e < 0:
                try:
                    out = divide(const(1), out)
                except (HenselError, ZeroDivisionError) as err:
                    raise ParseError(f"invalid negative power ({err})", text, n[3]) from None
            return out
        raise AssertionError(kind)

    return ev(node)


def parse_field_element(text, ctx):
    return _evaluate(parse_expression(text), text, ctx, ctx.symbols(), lambda a, b: a / b)


def parse_residue_poly(text, ctx):
    symbols = {k: ResiduePoly(ctx, [v]) for k, v in ctx.symbols().items()}
    symbols["x"] = ResiduePoly.x(ctx)

    def divide(a, b):
        if b.degree() != 0:
            raise ParseError("can only divide by a nonzero constant")
        return a * b[0].inverse()

    return _evaluate(parse_expression(text), text,
                     lambda n: ResiduePoly(ctx, [n]), symbols, divide)


def generator_names(ring):
    """Names accepted for the maximal-ideal generator of ``ring`` in text input."""
    names = {"g"}
    gen = ring.generator
    if gen.isidentifier() and gen not in ring.field.symbols() and gen != "x":
        names.add(gen)
    if ring.kind is RingKind.TWISTED:
        names.update({"tau", "τ"} - set(ring.field.symbols()))
    return names


def parse_local_poly(text, ring):
    symbols = {k: LocalPoly(ring, [v]) for k, v in ring.field.symbols().items()}
    pi = LocalPoly(ring, [ring.pi])
    for name in generator_names(ring):
        symbols[name] = pi
    symbols["x"] = LocalPoly.x(ring)

    def divide(a, b):
        if b.degree() > 0 or not b or not b[0].is_unit():
            raise ParseError("can only divide by a unit of the local ring")
        return a * b[0].inverse()

    return _evaluate(parse_expression(text), text,
                     lambda n: LocalPoly(ring, [n]), symbols, divide)


def parse_local_element(text, ring):
    f = parse_local_poly(text, ring)
    if f.degree() > 0:
        raise ParseError(f"expected an element of the local ring, got a polynomial in x: {text!r}")
    return f[0] if f else ring.zero


def _split_args(text):
    args, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            args.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        args.append(cur.strip())
    return args


_CALL = re.compile(r"^\s*(\w+)\s*(?:\((.*)\))?\s*$", re.S)


def parse_field_spec(text):
    """``Q``, ``GF(p)``, ``Qi`` or ``RatFunc(<field>, <var>)``."""
    m = _CALL.match(text)
    if not m:
        raise ParseError("malformed field spec", text, 0)
    name, inner = m.group(1), m.group(2)
    args = _split_args(inner) if inner is not None else []
    if name == "Q" and not args:
        return Rationals()
    if name == "Qi" and not args:
        return GaussianRationals()
    if name == "GF" and len(args) == 1:
        try:
            return PrimeField(int(args[0]))
        except ValueError as e:
            raise ParseError(str(e), text, m.start(2)) from None
    if name == "RatFunc" and len(args) == 2:
        try:
            return RationalFunctions(parse_field_spec(args[0]), args[1])
        except ValueError as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(str(e), text, m.start(2)) from None
    raise ParseError(f"unknown field spec {name!r}", text, m.start(1))


_AUTOMORPHISMS = {"conj": CONJUGATION, "conjugation": CONJUGATION,
                  "id": IDENTITY, "identity": IDENTITY}


def parse_ring_spec(text, precision=None):
    """``series(F, t, N=8)``, ``volterra(F, N=6)`` or ``twisted(F, conj, N=6)``.

    ``precision`` overrides the ``N=`` argument; without either, N defaults to 8.
    """
    m = _CALL.match(text)
    if not m or m.group(2) is None:
        raise ParseError("malformed ring spec", text, 0)
    name = m.group(1)
    args = _split_args(m.group(2))
    n = DEFAULT_PRECISION
    positional = []
    for a in args:
        if re.fullmatch(r"N\s*=\s*\d+", a):
            n = int(a.split("=")[1])
        else:
            positional.append(a)
    if precision is not None:
        n = precision
    if n < 1:
        raise ParseError("precision must be at least 1", text, m.start(2))
    if not positional:
        raise ParseError("ring spec needs a coefficient field", text, m.start(2))
    field = parse_field_spec(positional[0])
    extra = positional[1:]
    try:
        if name == "series":
            if len(extra) > 1:
                raise ParseError("series takes a field and a generator name", text, m.start(2))
            gen = extra[0] if extra else "t"
            return LocalRingContext(RingKind.COMMUTATIVE_SERIES, field, n, gen)
        if name == "volterra":
            if len(extra) > 1:
                raise ParseError("volterra takes a field and an optional derivation", text, m.start(2))
            if extra:
                der = extra[0]
            elif isinstance(field, RationalFunctions):
                der = f"d/d{field.var}"
            else:
                der = ZERO_DERIVATION
            return LocalRingContext(RingKind.VOLTERRA, field.with_structure(derivation=der), n)
        if name == "twisted":
            if len(extra) != 1 or extra[0] not in _AUTOMORPHISMS:
                raise ParseError("twisted needs an automorphism: conj or id", text, m.start(2))
            auto = _AUTOMORPHISMS[extra[0]]
            return LocalRingContext(RingKind.TWISTED, field.with_structure(automorphism=auto), n)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e), text, m.start(2)) from None
    raise ParseError(f"unknown ring kind {name!r}", text, m.start(1))


def ring_spec_text(ring):
    """Canonical spec string that :func:`parse_ring_spec` maps back to ``ring``."""
    field = ring.field.with_structure()
    if ring.kind is RingKind.COMMUTATIVE_SERIES:
        return f"series({field},{ring.generator},N={ring.precision})"
    if ring.kind is RingKind.VOLTERRA:
        return f"volterra({field},{ring.field.derivation},N={ring.precision})"
    auto = "conj" if ring.field.automorphism == CONJUGATION else "id"
    return f"twisted({field},{auto},N={ring.precision})"
