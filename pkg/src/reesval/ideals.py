"""Ideal arithmetic over affine algebras, on top of the Groebner engine.

An Ideal handle holds generators inside an AffineAlgebra; semantically it
denotes (generators + modulus)/modulus, and every cached basis includes the
modulus generators. Intersections, colons and kernels all route through one
mechanism: elimination.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import groebner
from .errors import PreconditionError
from .poly import Block, GrevLex, PolyRing
from .rings import AffineAlgebra

SATURATION_MAX_ITER = 64


class Ideal:
    def __init__(self, algebra, gens):
        self.algebra = algebra
        self.gens = tuple(gens)
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    def ambient_gens(self):
        return tuple(g for g in self.gens + self.algebra.modulus if not g.is_zero())

    def gb(self):
        """Reduced Groebner basis of generators + modulus in the ambient ring."""
        if self._gb is None:
            gens = self.ambient_gens()
            if not gens:
                self._gb = groebner.GroebnerBasis(
                    ring=self.algebra.ring, polys=(), reduced=True
                )
            else:
                self._gb = groebner.buchberger(gens)
        return self._gb

    def is_zero(self):
        return len(self.gb()) == 0 or all(
            groebner.contains(self.algebra.modulus_gb(), [g]) for g in self.gens
        )

    def is_unit(self):
        return groebner.contains(self.gb(), [self.algebra.ring.one])

    def contains_poly(self, f):
        return groebner.normal_form(f, self.gb()).is_zero()

    def contains_ideal(self, other):
        self._check(other)
        return all(self.contains_poly(g) for g in other.ambient_gens())

    def equals(self, other):
        return self.contains_ideal(other) and other.contains_ideal(self)

    def _check(self, other):
        if self.algebra != other.algebra:
            raise PreconditionError("ideals live in different algebras")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return Ideal(self.algebra, self.gens + other.gens)

    def product(self, other):
        self._check(other)
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.algebra, tuple(gens))

    def power(self, n):
        """All n-fold products of the generators; I^0 is the unit ideal."""
        if n < 0:
            raise PreconditionError("negative power")
        if n == 0:
            return Ideal(self.algebra, (self.algebra.ring.one,))
        gens = []
        for combo in combinations_with_replacement(self.gens, n):
            p = combo[0]
            for q in combo[1:]:
                p = p * q
            gens.append(p)
        return Ideal(self.algebra, tuple(gens))

    # -- elimination-backed operations ---------------------------------------

    def eliminate(self, drop_names):
        """Generators of (I + modulus) intersected with k[remaining vars].

        Returns an ideal over a fresh polynomial-ring algebra on the kept
        variables (any modulus content is folded into the generators).
        """
        ring = self.algebra.ring
        drop = tuple(n for n in ring.names if n in drop_names)
        if set(drop_names) - set(ring.names):
            raise PreconditionError("unknown variable in drop set")
        keep = tuple(n for n in ring.names if n not in drop_names)
        if not drop:
            target = AffineAlgebra(PolyRing(keep, ring.field, GrevLex()))
            pos = list(range(ring.nvars))
            return Ideal(
                target, tuple(g.map_exponents(target.ring, pos) for g in self.ambient_gens())
            )
        ering = PolyRing(drop + keep, ring.field, Block(len(drop)))
        pos = [ering.var_index(n) for n in ring.names]
        gens = [g.map_exponents(ering, pos) for g in self.ambient_gens()]
        target = AffineAlgebra(PolyRing(keep, ring.field, GrevLex()))
        if not gens:
            return Ideal(target, ())
        gb = groebner.buchberger(gens)
        kept = []
        kpos = [0] * ering.nvars
        for n in keep:
            kpos[ering.var_index(n)] = target.ring.var_index(n)
        for g in gb:
            if any(g.uses_var(ering.var_index(n)) for n in drop):
                continue
            kept.append(g.map_exponents(target.ring, kpos))
        return Ideal(target, tuple(kept))

    def intersect(self, other):
        """I cap J via the auxiliary variable t: eliminate t from t*I + (1-t)*J."""
        self._check(other)
        gens = _intersect_ambient(
            self.algebra.ring, self.ambient_gens(), other.ambient_gens()
        )
        return Ideal(self.algebra, gens)

    def quotient(self, f):
        """(I : f) = { g : g*f in I }."""
        f = self.algebra.reduce(f)
        if f.is_zero():
            raise PreconditionError("colon by zero")
        ring = self.algebra.ring
        inter = _intersect_ambient(ring, self.ambient_gens(), (f,))
        gens = tuple(_exact_divide(g, f) for g in inter)
        return Ideal(self.algebra, gens)

    def quotient_ideal(self, other):
        self._check(other)
        gens = [g for g in other.gens if not self.algebra.reduce(g).is_zero()]
        if not gens:
            raise PreconditionError("colon by the zero ideal")
        result = self.quotient(gens[0])
        for g in gens[1:]:
            result = result.intersect(self.quotient(g))
        return result

    def saturate(self, f, max_iter=SATURATION_MAX_ITER):
        """(I : f^infinity) by iterated colon; returns (ideal, iterations used).

        Stabilization is detected by mutual containment of consecutive steps.
        """
        current = self
        for k in range(max_iter):
            nxt = current.quotient(f)
            if current.contains_ideal(nxt):
                return current, k
            current = nxt
        raise PreconditionError(f"saturation did not stabilize within {max_iter} steps")

    def radical_contains(self, f):
        """Rabinowitsch: f in rad(I) iff 1 in (I, 1 - t*f) in an extended ring."""
        if self.algebra.reduce(f).is_zero():
            return True
        ring = self.algebra.ring
        ering = PolyRing(("_t",) + ring.names, ring.field, Block(1))
        pos = [ering.var_index(n) for n in ring.names]
        gens = [g.map_exponents(ering, pos) for g in self.ambient_gens()]
        gens.append(ering.one - ering.gen("_t") * f.map_exponents(ering, pos))
        gb = groebner.buchberger(gens)
        return groebner.contains(gb, [ering.one])


def _intersect_ambient(ring, gens1, gens2):
    """Ambient-ring intersection of two generator lists via the t-trick."""
    ering = PolyRing(("_t",) + ring.names, ring.field, Block(1))
    t = ering.gen("_t")
    pos = [ering.var_index(n) for n in ring.names]
    gens = [t * g.map_exponents(ering, pos) for g in gens1]
    one_minus_t = ering.one - t
    gens += [one_minus_t * g.map_exponents(ering, pos) for g in gens2]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    gb = groebner.buchberger(gens)
    out = []
    kpos = [0] * ering.nvars
    for n in ring.names:
        kpos[ering.var_index(n)] = ring.var_index(n)
    for g in gb:
        if g.uses_var(0):
            continue
        out.append(g.map_exponents(ring, kpos))
    return tuple(out)


def _exact_divide(g, f):
    """Quotient of g by f in the ambient polynomial ring; g must lie in (f)."""
    ring = g.ring
    q = ring.zero
    r = g
    while not r.is_zero():
        le, lc = r.lead_exp, r.lead_coeff
        if not all(a >= b for a, b in zip(le, f.lead_exp)):
            raise PreconditionError("inexact division")
        shift = tuple(a - b for a, b in zip(le, f.lead_exp))
        c = ring.field.mul(lc, ring.field.inv(f.lead_coeff))
        term = ring.monomial(shift, c)
        q = q + term
        r = r - term * f
    return q


def kernel_of_map(source_names, target_algebra, images, field=None, order=None):
    """Kernel of k[source] -> target_algebra, source var i -> images[i].

    Computed from the graph ideal (y_i - image_i) + modulus by eliminating
    the target variables. Returns an Ideal over k[source].
    """
    if len(source_names) != len(images):
        raise PreconditionError("one image per source variable")
    tring = target_algebra.ring
    field = field or tring.field
    if set(source_names) & set(tring.names):
        raise PreconditionError("source names must be disjoint from target names")
    ering = PolyRing(
        tring.names + tuple(source_names), field, Block(tring.nvars)
    )
    tpos = [ering.var_index(n) for n in tring.names]
    gens = [m.map_exponents(ering, tpos) for m in target_algebra.modulus]
    for name, img in zip(source_names, images):
        gens.append(ering.gen(name) - img.map_exponents(ering, tpos))
    big = Ideal(AffineAlgebra(ering), tuple(gens))
    result = big.eliminate(set(tring.names))
    if order is not None:
        newring = result.algebra.ring.with_order(order)
        alg = AffineAlgebra(newring)
        return Ideal(alg, tuple(newring.convert(g) for g in result.gens))
    return result
