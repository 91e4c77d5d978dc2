import random

import pytest

from nchensel.errors import ParseError
from nchensel.fields import GaussianRationals, PrimeField, Rationals, RationalFunctions
from nchensel.localring import RingKind
from nchensel.ncpoly import LocalPoly
from nchensel.parsing import (generator_names, parse_field_element, parse_field_spec,
                              parse_local_element, parse_local_poly, parse_residue_poly,
                              parse_ring_spec, ring_spec_text)
from nchensel.respoly import ResiduePoly

from randgen import QI, rand_elem, rand_local_poly, rand_residue_poly, sample_rings


def test_field_specs():
    assert parse_field_spec("Q") == Rationals()
    assert parse_field_spec("GF(7)") == PrimeField(7)
    assert parse_field_spec("Qi") == GaussianRationals()
    assert parse_field_spec("RatFunc(GF(3), s)") == RationalFunctions(PrimeField(3), "s")
    for bad in ("GF(8)", "R", "RatFunc(Q)", "GF(x)"):
        with pytest.raises(ParseError):
            parse_field_spec(bad)


def test_ring_specs():
    ring = parse_ring_spec("series(Q,t,N=5)")
    assert (ring.kind, ring.precision, ring.generator) == (RingKind.COMMUTATIVE_SERIES, 5, "t")
    assert parse_ring_spec("series(GF(5))").precision == 8
    assert parse_ring_spec("series(GF(5), N=3)", precision=6).precision == 6
    v = parse_ring_spec("volterra(RatFunc(Q,t), N=4)")
    assert v.kind is RingKind.VOLTERRA and v.field.derivation == "d/dt"
    assert parse_ring_spec("volterra(Q)").field.derivation == "zero"
    tw = parse_ring_spec("twisted(Qi, conj, N=6)")
    assert tw.kind is RingKind.TWISTED and tw.field.automorphism == "conjugation"
    for bad in ("series", "series()", "twisted(Qi)", "twisted(Qi, flip)", "ring(Q)",
                "series(Q, N=0)", "twisted(Q, conj)", "series(Q, t, s)"):
        with pytest.raises(ParseError):
            parse_ring_spec(bad)


def test_ring_spec_round_trip():
    for ring in sample_rings(5).values():
        assert parse_ring_spec(ring_spec_text(ring)) == ring


def test_field_elements():
    assert parse_field_element("3/4", Rationals()) == Rationals()("3/4")
    assert parse_field_element("2i - 1", QI) == 2 * QI.symbols()["i"] - 1
    assert parse_field_element("(1+i)^-1", QI) == (1 - QI.symbols()["i"]) / 2
    assert parse_field_element("1/3", PrimeField(5)) == 2
    qt = RationalFunctions(Rationals(), "t")
    t = qt.symbols()["t"]
    assert parse_field_element("t^2/(t+1)", qt) == t * t / (t + 1)


def test_field_element_round_trip():
    rng = random.Random(1)
    for field in (Rationals(), PrimeField(5), QI, RationalFunctions(Rationals(), "t")):
        for _ in range(30):
            a = rand_elem(field, rng)
            assert parse_field_element(str(a), field) == a


def test_residue_poly_round_trip():
    rng = random.Random(2)
    for field in (Rationals(), PrimeField(5), QI):
        for _ in range(20):
            f = rand_residue_poly(field, rng, rng.randint(0, 4), monic=False)
            assert parse_residue_poly(str(f), field) == f
    assert parse_residue_poly("x^2 - 1", Rationals()) == ResiduePoly.x(Rationals()) ** 2 - 1


def test_local_poly_round_trip():
    rng = random.Random(3)
    for ring in sample_rings(3).values():
        for _ in range(10):
            f = rand_local_poly(ring, rng, rng.randint(0, 3), size=1)
            assert parse_local_poly(str(f), ring) == f


def test_generator_aliases():
    ring = parse_ring_spec("twisted(Qi, conj, N=3)")
    assert generator_names(ring) >= {"g", "tau", "τ"}
    assert parse_local_poly("x^2 + 1 + tau", ring) == parse_local_poly("x^2+1+g", ring)
    series = parse_ring_spec("series(Q, t, N=3)")
    assert parse_local_poly("x + t", series) == parse_local_poly("x + g", series)
    # in a Volterra ring over Q(t), t is the coefficient, not the generator
    v = parse_ring_spec("volterra(RatFunc(Q,t), N=3)")
    assert "t" not in generator_names(v)
    g, t = parse_local_element("g", v), parse_local_element("t", v)
    assert parse_local_element("g*t", v) == g * t != t * g


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse_field_element("1 + $", Rationals())
    assert "position 4" in str(info.value)
    with pytest.raises(ParseError):
        parse_field_element("1/0", Rationals())
    with pytest.raises(ParseError):
        parse_field_element("", Rationals())
    with pytest.raises(ParseError):
        parse_field_element("(1 + 2", Rationals())
    with pytest.raises(ParseError):
        parse_field_element("x", Rationals())
    with pytest.raises(ParseError):
        parse_field_element("2^x", Rationals())
    ring = parse_ring_spec("series(Q, N=3)")
    with pytest.raises(ParseError):
        parse_local_poly("x/g", ring)
    with pytest.raises(ParseError):
        parse_local_element("x + 1", ring)
    with pytest.raises(ParseError):
        parse_residue_poly("1/x", Rationals())
    assert parse_local_poly("x/(1+g)", ring) == LocalPoly.x(ring) * (1 + ring.pi).inverse()
