import random
from fractions import Fraction

import pytest

from reesval import GrevLex, Lex, PolyRing, QQ, buchberger, normal_form
from reesval.errors import BudgetExceededError, OrderError
from reesval.groebner import is_groebner, s_polynomial


def test_twisted_cubic_lex_basis():
    R = PolyRing(("x", "y", "z"), QQ, Lex())
    x, y, z = R.gens()
    G = buchberger([x**2 - y, x**3 - z])
    expected = {x**2 - y, x * y - z, x * z - y**2, y**3 - z**2}
    assert set(G.polys) == expected
    assert G.reduced


def test_basis_is_groebner_and_ideal_membership():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    G = buchberger([x**2 + y, x * y - 1])
    assert is_groebner(G)
    f = (x**2 + y) * (x + y**3) + (x * y - 1) * y**2
    assert normal_form(f, G).is_zero()


def _random_poly(rng, ring, nterms=4, maxdeg=3):
    d = {}
    for _ in range(nterms):
        e = tuple(rng.randrange(maxdeg + 1) for _ in range(ring.nvars))
        d[e] = Fraction(rng.randint(-4, 4))
    return ring.poly_from_dict(d)


def test_normal_form_path_independence_randomized():
    # against a reduced basis the remainder must not depend on which
    # divisor is picked at each step
    rng = random.Random(2024)
    R = PolyRing(("x", "y", "z"), QQ, GrevLex())
    for trial in range(50):
        gens = [_random_poly(rng, R) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        G = buchberger(gens)
        f = _random_poly(rng, R, nterms=6)
        r_first = normal_form(f, G, selector=lambda c: c[0])
        r_last = normal_form(f, G, selector=lambda c: c[-1])
        r_rand = normal_form(f, G, selector=lambda c: rng.choice(c))
        assert r_first == r_last == r_rand


def test_reduced_basis_is_canonical():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    a = buchberger([x**2 - y**2, x * y + y**2])
    redundant = (x + y**2) * (x**2 - y**2) + y * (x * y + y**2)
    b = buchberger([x * y + y**2, x**2 - y**2, redundant])
    assert a.polys == b.polys
    for g in a:
        assert g.lead_coeff == 1


def test_s_polynomial_cancels_leads():
    R = PolyRing(("x", "y"), QQ, GrevLex())
    x, y = R.gens()
    f, g = x**2 * y + 1, x * y**2 + x
    s = s_polynomial(f, g)
    assert R.order.key(s.lead_exp) < R.order.key((2, 2))


def test_budget_exhaustion_raises():
    R = PolyRing(("x", "y", "z"), QQ, GrevLex())
    x, y, z = R.gens()
    gens = [x + y + z, x * y + y * z + z * x, x * y * z - 1]
    full = buchberger(gens)
    assert len(full) >= 3
    with pytest.raises(BudgetExceededError):
        buchberger(gens, budget=2)


def test_zgraded_order_rejected():
    from reesval import Weighted

    R = PolyRing(("y", "u"), QQ, Weighted((1, -1), zgraded=True))
    y, u = R.gens()
    with pytest.raises(OrderError):
        buchberger([y * u - 1])
