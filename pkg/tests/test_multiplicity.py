import random
from itertools import product

import pytest

from reesval import (
    AffineAlgebra,
    GrevLex,
    PolyRing,
    QQ,
    hilbert_series_monomial,
    krull_dim,
    length_sampler,
    local_multiplicity_via_gr,
    local_multiplicity_via_table,
    multiplicity_from_table,
    multiplicity_graded,
)
from reesval.errors import PreconditionError
from reesval.ideals import Ideal
from reesval.multiplicity import graded_invariants


def test_hilbert_series_staircase_dims():
    hs = hilbert_series_monomial(2, [(2, 0), (1, 1)])
    assert hs.coefficients(5) == [1, 2, 1, 1, 1, 1]
    assert hs.dim == 1


def test_hilbert_series_edge_cases():
    free = hilbert_series_monomial(1, [])
    assert free.numerator == (1,) and free.dim == 1 and free.multiplicity == 1
    unit = hilbert_series_monomial(2, [(0, 0)])
    assert unit.multiplicity == 0 and unit.dim == -1


def test_pivot_recursion_vs_direct_enumeration():
    rng = random.Random(7)
    for _ in range(20):
        nvars = rng.choice([2, 3])
        exps = [
            tuple(rng.randrange(5) for _ in range(nvars))
            for _ in range(rng.randint(1, 5))
        ]
        exps = [e for e in exps if sum(e) > 0] or [(1,) * nvars]
        hs = hilbert_series_monomial(nvars, exps)
        got = hs.coefficients(10)
        for d in range(11):
            direct = sum(
                1
                for m in product(range(d + 1), repeat=nvars)
                if sum(m) == d
                and not any(all(a <= b for a, b in zip(e, m)) for e in exps)
            )
            assert got[d] == direct


def test_multiplicity_graded_examples():
    hring = PolyRing(("X0", "X1", "X2", "X3"), QQ, GrevLex())
    X0, X1, X2, X3 = hring.gens()
    S = AffineAlgebra(hring, (X0 * X1 * X2 + X3**3,), asserted=("standard_graded",))
    assert multiplicity_graded(S) == 3
    free = AffineAlgebra(PolyRing(("a", "b"), QQ, GrevLex()))
    assert multiplicity_graded(free) == 1
    gring = PolyRing(("y1", "y2", "y3"), QQ, GrevLex())
    y1, y2, _ = gring.gens()
    G = AffineAlgebra(gring, (y1 * y2,))
    assert multiplicity_graded(G) == 2
    assert graded_invariants(G) == (2, 2)


def test_local_multiplicity_examples(paper_ring):
    x1, x2, x3 = paper_ring.ring.gens()
    assert local_multiplicity_via_gr(paper_ring) == 2
    assert local_multiplicity_via_gr(paper_ring, x1) == 3
    cusp_ring = AffineAlgebra(PolyRing(("x", "y"), QQ, GrevLex()))
    x, y = cusp_ring.ring.gens()
    assert local_multiplicity_via_gr(cusp_ring, x**2 + y**3) == 2


def test_local_multiplicity_requires_origin(paper_ring):
    x1 = paper_ring.ring.gen("x1")
    with pytest.raises(PreconditionError):
        local_multiplicity_via_gr(paper_ring, x1 + 1)


def test_length_sampler_regular(poly_xy):
    x, y = poly_xy.ring.gens()
    m = Ideal(poly_xy, (x, y))
    table = length_sampler(poly_xy, m, N=5)
    assert table == [(n, n * (n + 1) // 2) for n in range(1, 6)]
    e, stabilized = multiplicity_from_table(table, 2)
    assert (e, stabilized) == (1, True)


def test_length_sampler_monomial_ideal(poly_xy):
    x, y = poly_xy.ring.gens()
    I = Ideal(poly_xy, (x**2, y**3))
    table = length_sampler(poly_xy, I, N=6)
    e, stabilized = multiplicity_from_table(table, 2)
    assert e == 6 and stabilized


def test_length_sampler_rejects_positive_dimension(poly_xy):
    x, _ = poly_xy.ring.gens()
    with pytest.raises(PreconditionError):
        length_sampler(poly_xy, Ideal(poly_xy, (x,)), N=2)


def test_table_paper_ring_f_x1(paper_ring, paper_m):
    x1 = paper_ring.ring.gen("x1")
    table = length_sampler(paper_ring, paper_m, f=x1, N=6)
    dim = krull_dim(Ideal(paper_ring, (x1,)))
    assert dim == 1
    e, stabilized = multiplicity_from_table(table, dim)
    assert e == 3 and stabilized
    # second differences of the same table vanish eventually: the length
    # function is linear in n
    second, stab2 = multiplicity_from_table(table, 2)
    assert second == 0 and stab2


def test_table_too_short(poly_xy):
    with pytest.raises(PreconditionError):
        multiplicity_from_table([(1, 1), (2, 3)], 2)


def _cross_check(R, I_gens, f=None):
    I = Ideal(R, I_gens)
    via_gr = local_multiplicity_via_gr(R, f)
    via_table = local_multiplicity_via_table(R, I, f=f)
    assert via_gr == via_table
    return via_gr


def test_gr_vs_sampler_on_fixture_rings(paper_ring):
    # five fixtures where both routes apply
    x1, x2, x3 = paper_ring.ring.gens()
    assert _cross_check(paper_ring, (x1, x2, x3)) == 2
    assert _cross_check(paper_ring, (x1, x2, x3), f=x1) == 3
    assert _cross_check(paper_ring, (x1, x2, x3), f=x1 * x2) == 6

    plane = AffineAlgebra(PolyRing(("x", "y"), QQ, GrevLex()))
    x, y = plane.ring.gens()
    assert _cross_check(plane, (x, y)) == 1
    assert _cross_check(plane, (x, y), f=x**2 + y**3) == 2

    node = AffineAlgebra(
        PolyRing(("x", "y"), QQ, GrevLex()),
        (plane.ring.parse("x^2 - y^2 + y^3"),),
    )
    assert _cross_check(node, tuple(node.ring.gens())) == 2


def test_krull_dim(poly_xyz, paper_ring):
    x, y, z = poly_xyz.ring.gens()
    assert krull_dim(poly_xyz) == 3
    assert krull_dim(Ideal(poly_xyz, (x,))) == 2
    assert krull_dim(Ideal(poly_xyz, (x, y, z))) == 0
    assert krull_dim(paper_ring) == 2
