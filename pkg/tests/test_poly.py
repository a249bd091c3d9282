import random
from fractions import Fraction

import pytest

from reesval import Block, GrevLex, Lex, PolyRing, PrimeField, QQ, Weighted
from reesval.errors import OrderError, PreconditionError, RingMismatchError


def test_basic_arithmetic():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    f = (x + y) ** 2
    assert f == x**2 + 2 * x * y + y**2
    assert f - f == 0
    assert (f * 0).is_zero()
    assert (x - y) * (x + y) == x**2 - y**2


def test_leading_term_grevlex_vs_lex():
    R = PolyRing(("x", "y", "z"), QQ, GrevLex())
    x, y, z = R.gens()
    f = x * z + y**2  # same degree; grevlex prefers y^2 (smaller last exponent)
    assert f.lead_exp == (0, 2, 0)
    L = R.with_order(Lex())
    assert L.convert(f).lead_exp == (1, 0, 1)


def test_block_order_isolates_front_variables():
    R = PolyRing(("t", "x", "y"), QQ, Block(1))
    t, x, y = R.gens()
    f = t + x**5 * y**5
    assert f.lead_exp == (1, 0, 0)


def test_weighted_order_rejects_nonpositive_weight():
    with pytest.raises(OrderError):
        Weighted((1, 0))
    w = Weighted((1, -1), zgraded=True)
    assert not w.all_weights_positive


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.inv(3) == 5
    assert F.coerce(Fraction(1, 3)) == 5
    assert F.coerce(-1) == 6
    with pytest.raises(ValueError):
        PrimeField(6)
    R = PolyRing(("x",), F, GrevLex())
    x = R.gen("x")
    assert (x * 7).is_zero()
    assert (3 * x + 4 * x) == 0


def test_parse_round_trip():
    R = PolyRing(("x1", "x2", "x3"), QQ, GrevLex())
    samples = [
        "x1*x2 + x3^3",
        "2*x1^2 - 3/4*x2 + 1",
        "-x1 + x2*x3",
        "5",
    ]
    for s in samples:
        f = R.parse(s)
        assert R.parse(str(f)) == f


def test_parse_rejects_garbage():
    R = PolyRing(("x",), QQ, GrevLex())
    for bad in ["", "x +", "x ^", "y", "x**2", "1..2"]:
        with pytest.raises(PreconditionError):
            R.parse(bad)


def test_ring_mismatch_detected():
    A = PolyRing(("x",), QQ, GrevLex())
    B = PolyRing(("x",), QQ, Lex())
    with pytest.raises(RingMismatchError):
        A.gen("x") + B.gen("x")


def test_homogeneous_and_lowest_form():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    f = x**2 + y**3
    assert not f.is_homogeneous()
    assert f.lowest_degree_form() == x**2
    assert (x * y + y**2).is_homogeneous()


def test_substitute_and_map_exponents():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    S = PolyRing(("a", "b", "c"), QQ, GrevLex())
    x, y = R.gens()
    a, b, c = S.gens()
    f = x**2 + x * y
    assert f.substitute(S, [a, b * c]) == a**2 + a * b * c
    g = f.map_exponents(S, [0, 2])
    assert g == a**2 + a * c


def test_canonical_terms_sorted_descending():
    rng = random.Random(11)
    R = PolyRing(("x", "y", "z"), QQ, GrevLex())
    for _ in range(20):
        d = {
            tuple(rng.randrange(4) for _ in range(3)): Fraction(rng.randint(-5, 5))
            for _ in range(6)
        }
        f = R.poly_from_dict(d)
        keys = [R.order.key(e) for e, _ in f.terms]
        assert keys == sorted(keys, reverse=True)
        assert all(c != 0 for _, c in f.terms)


def test_pow_matches_repeated_multiplication():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    f = x + 2 * y + 1
    g = R.one
    for _ in range(5):
        g = g * f
    assert f**5 == g
