import random

import pytest

from reesval import (
    AffineAlgebra,
    GrevLex,
    PolyRing,
    QQ,
    extended_rees_presentation,
    lift_to_rees,
    ord_at,
    symbolic_order_along,
    symbolic_power,
)
from reesval.errors import PreconditionError
from reesval.ideals import Ideal, kernel_of_map


def curve_345():
    tring = PolyRing(("t",), QQ, GrevLex())
    t = tring.gen("t")
    P = kernel_of_map(("x", "y", "z"), AffineAlgebra(tring), [t**3, t**4, t**5])
    return P.algebra, P


def test_variable_prime_symbolic_equals_ordinary(poly_xyz):
    x, y, z = poly_xyz.ring.gens()
    P = Ideal(poly_xyz, (x, y))
    for n in range(1, 5):
        power, cert = symbolic_power(poly_xyz, P, n)
        assert cert["status"] == "exact"
        assert power.equals(P.power(n))


def test_symbolic_power_n1_is_the_prime(paper_ring):
    x1, x3 = paper_ring.ring.gen("x1"), paper_ring.ring.gen("x3")
    P = Ideal(paper_ring, (x1, x3))
    power, cert = symbolic_power(paper_ring, P, 1)
    assert power.equals(P) and cert["status"] == "exact"


def test_curve_prime_strict_containment():
    alg, P = curve_345()
    x = alg.ring.gen("x")
    p2, cert = symbolic_power(alg, P, 2, separator=x)
    assert cert["status"] == "exact"
    sq = P.power(2)
    assert p2.contains_ideal(sq)
    assert not sq.contains_ideal(p2)  # strictly bigger


def test_containment_chain(paper_ring):
    x1, x3 = paper_ring.ring.gen("x1"), paper_ring.ring.gen("x3")
    P = Ideal(paper_ring, (x1, x3))
    powers = [symbolic_power(paper_ring, P, n)[0] for n in range(1, 5)]
    for n in range(1, 5):
        assert powers[n - 1].contains_ideal(P.power(n))
    for n in range(1, 4):
        assert powers[n - 1].contains_ideal(powers[n])


def test_symbolic_product_containment(paper_ring):
    x1, x3 = paper_ring.ring.gen("x1"), paper_ring.ring.gen("x3")
    P = Ideal(paper_ring, (x1, x3))
    cache = {n: symbolic_power(paper_ring, P, n)[0] for n in range(1, 5)}
    for a in range(1, 3):
        for b in range(1, 5 - a):
            assert cache[a + b].contains_ideal(cache[a].product(cache[b]))


def test_separator_must_avoid_prime(poly_xyz):
    x, y, _ = poly_xyz.ring.gens()
    P = Ideal(poly_xyz, (x, y))
    with pytest.raises(PreconditionError):
        symbolic_power(poly_xyz, P, 2, separator=x)


def test_auto_separator_needs_recognizable_shape(poly_xyz):
    x, y, z = poly_xyz.ring.gens()
    # dim of quotient is 2: auto rule refuses
    P = Ideal(poly_xyz, (x,))
    with pytest.raises(PreconditionError):
        symbolic_power(poly_xyz, P, 2)


def test_ord_at_paper_values(paper_ring, paper_m):
    x1, x2, x3 = paper_ring.ring.gens()
    assert ord_at(paper_ring, paper_m, x1) == (1, True)
    assert ord_at(paper_ring, paper_m, x1 * x2) == (3, True)
    assert ord_at(paper_ring, paper_m, x3**2) == (2, True)
    with pytest.raises(PreconditionError):
        ord_at(paper_ring, paper_m, paper_ring.ring.zero)


def test_ord_nmax_flag(paper_ring, paper_m):
    x1 = paper_ring.ring.gen("x1")
    n, confirmed = ord_at(paper_ring, paper_m, x1**3, nmax=2)
    assert n == 2 and not confirmed


def test_ord_superadditive_random(paper_ring, paper_m):
    rng = random.Random(5)
    ring = paper_ring.ring
    exps = [e for e in ring.monomials_up_to_degree(2) if sum(e) > 0]
    pairs = 0
    while pairs < 30:
        f = ring.zero
        g = ring.zero
        for e in rng.sample(exps, 2):
            f = f + ring.monomial(e, rng.randint(1, 3))
        for e in rng.sample(exps, 2):
            g = g + ring.monomial(e, rng.randint(1, 3))
        if paper_ring.reduce(f).is_zero() or paper_ring.reduce(g).is_zero():
            continue
        pairs += 1
        of, _ = ord_at(paper_ring, paper_m, f, nmax=8)
        og, _ = ord_at(paper_ring, paper_m, g, nmax=8)
        ofg, _ = ord_at(paper_ring, paper_m, f * g, nmax=8)
        assert ofg >= of + og


def test_symbolic_order_along_paper_values(paper_ring, paper_m):
    pres = extended_rees_presentation(paper_ring, paper_m)
    alg = pres.algebra
    u, y1, y2 = alg.ring.gen("u"), alg.ring.gen("y1"), alg.ring.gen("y2")
    Q1 = Ideal(alg, (u, y1))
    Q2 = Ideal(alg, (u, y2))
    x1 = paper_ring.ring.gen("x1")
    g = lift_to_rees(pres, x1)
    assert symbolic_order_along(alg, Q1, g) == 2
    assert symbolic_order_along(alg, Q2, g) == 1
    assert symbolic_order_along(alg, Q1, u) == 1
    assert symbolic_order_along(alg, Q2, u) == 1


def test_symbolic_order_along_height_screen(paper_ring, paper_m):
    pres = extended_rees_presentation(paper_ring, paper_m)
    alg = pres.algebra
    u, y1, y2 = alg.ring.gen("u"), alg.ring.gen("y1"), alg.ring.gen("y2")
    not_height_one = Ideal(alg, (u, y1, y2))
    with pytest.raises(PreconditionError):
        symbolic_order_along(alg, not_height_one, u)
