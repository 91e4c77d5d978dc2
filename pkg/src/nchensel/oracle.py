"""Brute-force checks that share no code path with the lifting engine.

``exhaustive_factor_search`` enumerates every monic factor pair over
GF(p)[[t]]/(t^n) with plain integer arrays; ``volterra_mul_recursive_oracle``
multiplies Volterra series using only the one-step rewriting rule
``d^-1 c = c d^-1 - d^-1 c' d^-1``.
"""

from __future__ import annotations

import numpy as np

from .errors import SearchSpaceTooLarge
from .fields import PrimeField
from .localring import LocalElement, RingKind
from .ncpoly import LocalPoly

MAX_SEARCH = 10 ** 7
_CHUNK_PAIRS = 1 << 17


def _all_monic(p, d, n):
    """Every monic degree-d polynomial over GF(p)[t]/(t^n) as an (M, d+1, n) array."""
    m = p ** (n * d)
    digits = np.arange(m, dtype=np.int64)
    out = np.zeros((m, d + 1, n), dtype=np.int64)
    for k in range(d):
        for j in range(n):
            out[:, k, j] = digits % p
            digits //= p
    out[:, d, 0] = 1
    return out


def exhaustive_factor_search(f, d1, d2):
    """All monic (F1, F2) of degrees (d1, d2) with F1*F2 == f over GF(p)[[t]]/(t^n).

    Results are sorted lexicographically by their coefficient arrays.
    """
    ring = f.ring
    if ring.kind is not RingKind.COMMUTATIVE_SERIES or not isinstance(ring.field, PrimeField):
        raise ValueError("exhaustive search needs a commutative series ring over GF(p)")
    if not f.is_monic() or d1 + d2 != f.degree() or min(d1, d2) < 0:
        raise ValueError("f must be monic of degree d1 + d2")
    p, n = ring.field.p, ring.precision
    size = p ** (n * (d1 + d2))
    if n > 3 or f.degree() > 3 or size > MAX_SEARCH:
        raise SearchSpaceTooLarge(f"{size} candidate pairs (n={n}, deg={f.degree()})")

    target = np.array([[c.rep for c in a.coeffs] for a in f.coeffs], dtype=np.int64)
    A1 = _all_monic(p, d1, n)
    A2 = _all_monic(p, d2, n)
    chunk = max(1, _CHUNK_PAIRS // len(A2))
    hits = []
    for start in range(0, len(A1), chunk):
        B1 = A1[start:start + chunk]
        prod = np.zeros((len(B1), len(A2), d1 + d2 + 1, n), dtype=np.int64)
        for i in range(d1 + 1):
            for j in range(d2 + 1):
                for u in range(n):
                    for v in range(n - u):
                        prod[:, :, i + j, u + v] += B1[:, None, i, u] * A2[None, :, j, v]
        ok = np.all((prod % p) == target, axis=(2, 3))
        for a, b in zip(*np.nonzero(ok)):
            hits.append((B1[a], A2[b]))

    def to_poly(arr):
        return LocalPoly(ring, [LocalElement(ring, [int(v) for v in row]) for row in arr])

    hits.sort(key=lambda ab: (ab[0].tolist(), ab[1].tolist()))
    return [(to_poly(a), to_poly(b)) for a, b in hits]


def _dinv_times(series, field, n):
    """d^-1 * sum_k s_k d^-k, one generator at a time, via c' recursion."""
    out = [field.zero] * n
    for k, c in enumerate(series):
        # d^-1 c d^-k = c d^-(k+1) - (d^-1 c') d^-(k+1)
        sign = 1
        level = k + 1
        while c and level < n:
            out[level] = out[level] + c * sign
            c = field.apply_derivation(c, 1)
            sign = -sign
            level += 1
    return out


def volterra_mul_recursive_oracle(a, b):
    ctx = a.ctx
    if ctx.kind is not RingKind.VOLTERRA:
        raise ValueError("the recursive oracle only applies to Volterra rings")
    field, n = ctx.field, ctx.precision
    out = [field.zero] * n
    cur = list(b.coeffs)
    for i in range(n):
        ai = a.coeffs[i]
        if ai:
            for k in range(n):
                out[k] = out[k] + ai * cur[k]
        cur = _dinv_times(cur, field, n)
    return LocalElement(ctx, out)


def series_power_check(a, target, exponent):
    if exponent < 1:
        raise ValueError("exponent must be at least 1")
    acc = a
    for _ in range(exponent - 1):
        acc = acc * a
    return acc == target
