"""Acceptance criteria, one test each, timed against their stated budgets.

The terminal summary prints a PASS/FAIL line per criterion (see conftest.py).
"""

import itertools
import json
import random
import time
from fractions import Fraction

from nchensel.cli import main
from nchensel.hensel import commute_factors, hensel_lift, lift_root, primary_decomposition
from nchensel.localring import elem_mul, is_almost_commutative_probe, valuation
from nchensel.ncpoly import LocalPoly, lift_poly, reduce_poly, right_divmod, right_evaluate
from nchensel.oracle import (exhaustive_factor_search, series_power_check,
                             volterra_mul_recursive_oracle)
from nchensel.parsing import parse_field_element
from nchensel.respoly import ResiduePoly, factor_primepowers, gcd

from randgen import (GF5, Q, QI_CONJ, QT_D, rand_coprime_split, rand_elem, rand_lift_instance,
                     rand_local, rand_local_poly, rand_residue_poly, series, twisted, volterra)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_twisted_root_obstruction(capsys):
    """1. twisted Qi root of x^2+1+g at i is obstructed at stage 1 with residual form 1 (< 1 s)"""
    with Timer() as tm:
        code = main(["root", "--ring", "twisted(Qi,conj,N=4)", "--poly", "x^2 + 1 + g",
                     "--at", "i", "--output", "structured"])
        doc = json.loads(capsys.readouterr().out)
    assert code == 2
    assert doc["status"] == "obstructed"
    obs = doc["obstruction"]
    assert obs["stage"] == 1
    assert obs["residual_leading_form"] == "1"
    assert obs["residual_leading_form_coefficients"] == ["1"]
    # the stage-1 equation a0*a1 + conj(a0)*a1 + 1 = 0 has no solution because a0 + conj(a0) = 0
    a0 = parse_field_element("i", QI_CONJ)
    assert a0 + QI_CONJ.apply_automorphism(a0) == 0
    assert tm.elapsed < 1


def test_lifting_at_desk_scale():
    """2. 300 random GF(5)[[t]] lifts (deg <= 6, N <= 6) all LIFTED with f = F1*F2 exactly (< 30 s)"""
    rng = random.Random(2)
    with Timer() as tm:
        for _ in range(300):
            ring = series(GF5, rng.randint(1, 6))
            deg = rng.randint(2, 6)
            d1 = rng.randint(1, deg - 1)
            f, f1, f2 = rand_lift_instance(ring, rng, d1, deg - d1)
            out = hensel_lift(f, f1, f2)
            assert out.lifted
            F1, F2 = out.factors
            assert F1 * F2 == f
            assert reduce_poly(F1) == f1 and reduce_poly(F2) == f2
    assert tm.elapsed < 30


def _monic_divisors(fbar, d):
    for tail in itertools.product(range(5), repeat=d):
        cand = ResiduePoly(GF5, list(tail) + [1])
        if not fbar % cand:
            yield cand


def test_oracle_equivalence_and_uniqueness():
    """3. exhaustive search finds exactly the engine's factor pair per coprime split, 50 instances (< 5 min)"""
    rng = random.Random(3)
    splits_checked = 0
    with Timer() as tm:
        for k in range(50):
            ring = series(GF5, rng.randint(1, 3))
            deg = 2 if k % 2 else 3
            d1 = rng.randint(1, deg - 1)
            f, _, _ = rand_lift_instance(ring, rng, d1, deg - d1)
            fbar = reduce_poly(f)
            for e1 in range(1, deg):
                hits = exhaustive_factor_search(f, e1, deg - e1)
                for f1 in _monic_divisors(fbar, e1):
                    f2 = fbar // f1
                    if gcd(f1, f2) != 1:
                        continue
                    matching = [(a, b) for a, b in hits
                                if reduce_poly(a) == f1 and reduce_poly(b) == f2]
                    assert matching == [hensel_lift(f, f1, f2).factors]
                    splits_checked += 1
    assert splits_checked >= 50
    assert tm.elapsed < 300


def test_square_root_lift():
    """4. root of x^2 - (1+t) over Q[[t]] at N=8 has the binomial-series coefficients (< 1 s)"""
    with Timer() as tm:
        ring = series(Q, 8)
        x, t = LocalPoly.x(ring), ring.pi
        a = lift_root(x ** 2 - (1 + t), 1)
        assert series_power_check(a, 1 + t, 2)
        assert a.residue() == 1
        assert [c.rep for c in a.coeffs[:5]] == [1, Fraction(1, 2), Fraction(-1, 8),
                                                 Fraction(1, 16), Fraction(-5, 128)]
        # the squaring oracle certifies the truncated series on its own
        low = series(Q, 5)
        assert series_power_check(low.element(a.coeffs[:5]), 1 + low.pi, 2)
    assert tm.elapsed < 1


def test_volterra_arithmetic_and_probe():
    """5. Volterra products match the recursive oracle, d^-1*t = t*d^-1 - d^-2, probe verdicts (< 10 s)"""
    rng = random.Random(5)
    with Timer() as tm:
        ring = volterra(5)
        for _ in range(50):
            a, b = rand_local(ring, rng, size=1), rand_local(ring, rng, size=1)
            assert elem_mul(a, b) == volterra_mul_recursive_oracle(a, b)
        g, t = ring.pi, ring.lift(QT_D.symbols()["t"])
        assert g * t == t * g - g ** 2
        samples = [rand_elem(QT_D, rng) for _ in range(10)]
        assert is_almost_commutative_probe(ring, samples).almost_commutative
        assert is_almost_commutative_probe(series(GF5, 4), [GF5(c) for c in range(5)]).almost_commutative
        res = is_almost_commutative_probe(twisted(4), [QI_CONJ(1), QI_CONJ.symbols()["i"]])
        assert not res.almost_commutative
        assert valuation(res.commutator) == 1
    assert tm.elapsed < 10


def test_remainder_theorem():
    """6. right_divmod remainder equals right_evaluate on 200 random (f, a) per ring kind (< 10 s)"""
    rng = random.Random(6)
    rings = [series(GF5, 4), volterra(4), twisted(4)]
    with Timer() as tm:
        for ring in rings:
            for _ in range(200):
                f = rand_local_poly(ring, rng, rng.randint(0, 4), size=1)
                a = rand_local(ring, rng, size=1)
                _, rem = right_divmod(f, a)
                assert rem == right_evaluate(f, a)
    assert tm.elapsed < 10


def test_commute_factors():
    """7. commute_factors on 50 coprime monic pairs over GF(5)[[t]], N=4: p1*p = q1*q (< 30 s)"""
    rng = random.Random(7)
    ring = series(GF5, 4)
    with Timer() as tm:
        for _ in range(50):
            pbar, qbar = rand_coprime_split(GF5, rng, rng.randint(1, 3), rng.randint(1, 3))
            p = lift_poly(pbar, ring) + rand_local_poly(ring, rng, pbar.degree() - 1, min_val=1)
            q = lift_poly(qbar, ring) + rand_local_poly(ring, rng, qbar.degree() - 1, min_val=1)
            p1, q1 = commute_factors(p, q)
            assert p1 * p == q1 * q
            assert p1.degree() == q.degree() and q1.degree() == p.degree()
            assert q1.is_monic()
    assert tm.elapsed < 30


def test_primary_decomposition():
    """8. primary_decomposition on 30 GF(5)[[t]] polys with >= 2 residue blocks multiplies back to f (< 30 s)"""
    rng = random.Random(8)
    ring = series(GF5, 4)
    done = 0
    with Timer() as tm:
        while done < 30:
            fbar = ResiduePoly(GF5, [1])
            for _ in range(rng.randint(2, 3)):
                fbar = fbar * rand_residue_poly(GF5, rng, rng.randint(1, 2))
            blocks = [b for b, _ in factor_primepowers(fbar)]
            if len(blocks) < 2:
                continue
            f = lift_poly(fbar, ring) + rand_local_poly(ring, rng, fbar.degree() - 1, min_val=1)
            factors = primary_decomposition(f, blocks)
            prod = factors[0]
            for p in factors[1:]:
                prod = prod * p
            assert prod == f
            assert [reduce_poly(p) for p in factors] == blocks
            assert all(p.is_monic() for p in factors)
            done += 1
    assert tm.elapsed < 30
