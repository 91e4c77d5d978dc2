import itertools
import random

import pytest

from nchensel.errors import DegreeTooLarge, DivisionByZero, NotCoprime, UnsupportedField
from nchensel.fields import PrimeField
from nchensel.respoly import (ResiduePoly, bezout_solve_constrained, extended_euclid,
                              factor_primepowers, gcd, is_simple_root, rpoly_arith)

from randgen import FIELDS, GF5, Q, QI, rand_residue_poly

x = ResiduePoly.x(Q)
y = ResiduePoly.x(GF5)
z = ResiduePoly.x(QI)
I = QI.symbols()["i"]


def monic_polys(field, d):
    for tail in itertools.product(field.elements(), repeat=d):
        yield ResiduePoly(field, list(tail) + [1])


def is_irreducible_by_trial_division(q):
    field = q.ctx
    return all(q % m for d in range(1, q.degree() // 2 + 1) for m in monic_polys(field, d))


def test_arith_examples():
    assert rpoly_arith("MUL", x - 1, x + 1) == x ** 2 - 1
    assert rpoly_arith("DIVMOD", z ** 2 + 1, z - I) == (z + I, 0)
    q, r = rpoly_arith("DIVMOD", y ** 3 + 2 * y + 1, y ** 2 + 1)
    assert (q, r) == (y, y + 1)
    assert q * (y ** 2 + 1) + r == y ** 3 + 2 * y + 1
    with pytest.raises(DivisionByZero):
        rpoly_arith("DIVMOD", x, ResiduePoly(Q, []))


def test_zero_polynomial_degree():
    zero = ResiduePoly(Q, [0, 0])
    assert zero.degree() == -1
    assert not zero
    assert ResiduePoly(Q, [1, 2, 0]).degree() == 1


def test_extended_euclid_examples():
    g, u, v = extended_euclid(x - 1, x + 1)
    assert (g, u, v) == (1, ResiduePoly(Q, ["-1/2"]), ResiduePoly(Q, ["1/2"]))
    assert extended_euclid(x ** 2, x) == (x, 0, 1)
    g, u, v = extended_euclid(y + 4, y + 1)
    assert (g, u, v) == (1, 2, 3)
    assert 2 * (y + 4) + 3 * (y + 1) == 1


@pytest.mark.parametrize("name", sorted(FIELDS))
def test_extended_euclid_properties(name):
    field = FIELDS[name]
    rng = random.Random(name)
    count, top = (40, 2) if name == "Q(t)" else (200, 4)
    for _ in range(count):
        a = rand_residue_poly(field, rng, rng.randint(0, top), monic=False, size=2)
        b = rand_residue_poly(field, rng, rng.randint(0, top), monic=False, size=2)
        g, u, v = extended_euclid(a, b)
        assert u * a + v * b == g
        assert g.is_monic()
        assert not a % g and not b % g


def test_bezout_examples():
    assert bezout_solve_constrained(x - 1, x + 1, ResiduePoly(Q, [1])) == (
        ResiduePoly(Q, ["1/2"]), ResiduePoly(Q, ["-1/2"]))
    zero = ResiduePoly(Q, [])
    assert bezout_solve_constrained(x - 1, x + 1, zero) == (zero, zero)


def exhaustive_bezout(f1, f2, c):
    field = f1.ctx
    sols = []
    for t1 in itertools.product(field.elements(), repeat=f1.degree()):
        g1 = ResiduePoly(field, t1)
        for t2 in itertools.product(field.elements(), repeat=f2.degree()):
            g2 = ResiduePoly(field, t2)
            if f2 * g1 + f1 * g2 == c:
                sols.append((g1, g2))
    return sols


def test_bezout_gf5_matches_exhaustive_search():
    f1, f2, c = y + 4, y + 1, y
    assert exhaustive_bezout(f1, f2, c) == [bezout_solve_constrained(f1, f2, c)]
    rng = random.Random(3)
    for _ in range(25):
        d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
        if d1 + d2 > 4:
            d2 = 4 - d1
        f1 = rand_residue_poly(GF5, rng, d1)
        f2 = rand_residue_poly(GF5, rng, d2)
        if gcd(f1, f2) != 1:
            continue
        c = rand_residue_poly(GF5, rng, d1 + d2 - 1, monic=False)
        g1, g2 = bezout_solve_constrained(f1, f2, c)
        assert f2 * g1 + f1 * g2 == c
        assert g1.degree() < d1 and g2.degree() < d2
        assert exhaustive_bezout(f1, f2, c) == [(g1, g2)]


@pytest.mark.parametrize("name", ["Q", "Qi", "Q(t)"])
def test_bezout_substitution(name):
    field = FIELDS[name]
    rng = random.Random(name)
    top = 2 if name == "Q(t)" else 3
    for _ in range(30):
        f1 = rand_residue_poly(field, rng, rng.randint(1, top), size=2)
        f2 = rand_residue_poly(field, rng, rng.randint(1, top), size=2)
        if gcd(f1, f2) != 1:
            continue
        c = rand_residue_poly(field, rng, f1.degree() + f2.degree() - 1, monic=False, size=2)
        g1, g2 = bezout_solve_constrained(f1, f2, c)
        assert f2 * g1 + f1 * g2 == c
        assert g1.degree() < f1.degree() and g2.degree() < f2.degree()


def test_bezout_errors():
    with pytest.raises(NotCoprime):
        bezout_solve_constrained(x - 1, (x - 1) * (x + 2), ResiduePoly(Q, [1]))
    with pytest.raises(DegreeTooLarge):
        bezout_solve_constrained(x - 1, x + 1, x ** 2)


def test_factor_primepowers_examples():
    assert set(factor_primepowers(y ** 2 + 4)) == {(y + 4, 1), (y + 1, 1)}
    assert factor_primepowers((y - 1) ** 2) == [((y - 1) ** 2, 2)]
    assert set(factor_primepowers(y ** 2 + 1)) == {(y + 2, 1), (y + 3, 1)}
    assert factor_primepowers(ResiduePoly(GF5, [1])) == []


def test_factor_primepowers_properties():
    rng = random.Random(8)
    for _ in range(60):
        f = rand_residue_poly(GF5, rng, rng.randint(1, 7))
        if rng.random() < 0.5:
            f = f * rand_residue_poly(GF5, rng, rng.randint(1, 2)) ** 2
        blocks = factor_primepowers(f)
        prod = ResiduePoly(GF5, [1])
        for b, _ in blocks:
            prod = prod * b
        assert prod == f
        for (a, _), (b, _) in itertools.combinations(blocks, 2):
            assert gcd(a, b) == 1
        for b, e in blocks:
            assert b.degree() % e == 0
            d = b.degree() // e
            q = b if e == 1 else next(m for m in monic_polys(GF5, d) if not b % m)
            assert q ** e == b
            assert is_irreducible_by_trial_division(q)


def test_factor_primepowers_large_prime_uses_equal_degree_split():
    gf = PrimeField(101)
    w = ResiduePoly.x(gf)
    c1, c2 = w ** 3 + w + 1, w ** 3 + w + 3
    assert factor_primepowers(c1) == [(c1, 1)]
    assert factor_primepowers(c2) == [(c2, 1)]
    blocks = factor_primepowers(c1 ** 2 * c2 * (w - 3))
    assert set(blocks) == {(w - 3, 1), (c1 ** 2, 2), (c2, 1)}


def test_factor_primepowers_unsupported():
    with pytest.raises(UnsupportedField):
        factor_primepowers(x ** 2 + 1)
    with pytest.raises(UnsupportedField):
        factor_primepowers(ResiduePoly.x(PrimeField(103)) + 1)
    with pytest.raises(UnsupportedField):
        factor_primepowers(y ** 13 + 1)


def test_is_simple_root():
    assert is_simple_root(z ** 2 + 1, I)
    assert not is_simple_root((x - 1) ** 2, Q(1))
    assert not is_simple_root(x ** 2 - 1, Q(2))


def test_text_form():
    assert str(x ** 2 - 2 * x + ResiduePoly(Q, ["1/2"])) == "x^2 - 2*x + 1/2"
    assert str((1 + 2 * I) * z + 1) == "(1 + 2*i)*x + 1"
