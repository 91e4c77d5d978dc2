"""Dense univariate polynomial kernels over a field.

Polynomials are lists of field elements, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Elements only need the
arithmetic operators, ``bool`` for a zero test and division by nonzero
elements, so these kernels serve both the residue polynomial type and the
numerator/denominator pairs of rational-function fields.
"""

from .errors import DivisionByZero


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    return trim([c * x for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    inv = 1 / b[-1]
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    q = [b[0] * 0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = a[k + j] - c * y
    return trim(q), trim(a[:db])


def monic(a):
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def xgcd(a, b, one):
    """Return ``(g, u, v)`` with ``g`` monic (or zero) and ``u*a + v*b == g``."""
    r0, r1 = trim(a), trim(b)
    u0, u1 = [one], []
    v0, v1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1))
        v0, v1 = v1, sub(v0, mul(q, v1))
    if not r0:
        return [], [], []
    inv = 1 / r0[-1]
    return [c * inv for c in r0], scale(u0, inv), scale(v0, inv)


def gcd(a, b):
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([c * i for i, c in enumerate(a)][1:])


def evaluate(a, x, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc
