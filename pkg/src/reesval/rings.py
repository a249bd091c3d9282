"""Affine algebras k[x]/P, homogenization, extended Rees presentations.

Normality / primality of user-supplied algebras and primes are ASSERTED,
never decided here; operations that rely on an assertion echo it in their
reports so a reader can see what a verdict depended on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groebner
from .errors import NotHomogeneousError, PreconditionError
from .poly import Block, GrevLex, PolyRing


class AffineAlgebra:
    """A quotient k[x1..xn]/P presented by its ambient ring and modulus."""

    def __init__(self, ring, modulus=(), asserted=()):
        self.ring = ring
        self.modulus = tuple(m for m in modulus if not m.is_zero())
        self.asserted = frozenset(asserted)
        self._modulus_gb = None
        if "standard_graded" in self.asserted:
            if any(not m.is_homogeneous() for m in self.modulus):
                raise NotHomogeneousError(
                    "standard_graded asserted but modulus has a non-homogeneous generator"
                )

    def modulus_gb(self):
        if self._modulus_gb is None:
            if self.modulus:
                self._modulus_gb = groebner.buchberger(self.modulus)
            else:
                self._modulus_gb = groebner.GroebnerBasis(
                    ring=self.ring, polys=(), reduced=True
                )
        return self._modulus_gb

    def is_proper(self):
        """True iff 1 is not in the modulus."""
        if not self.modulus:
            return True
        return not groebner.contains(self.modulus_gb(), [self.ring.one])

    def reduce(self, f):
        """Canonical representative of f modulo the modulus."""
        if not self.modulus:
            return f
        return groebner.normal_form(f, self.modulus_gb())

    def __eq__(self, other):
        return (
            isinstance(other, AffineAlgebra)
            and self.ring == other.ring
            and set(self.modulus) == set(other.modulus)
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.modulus)))

    def __repr__(self):
        mods = ", ".join(str(m) for m in self.modulus) or "0"
        return f"{self.ring.field}[{','.join(self.ring.names)}]/({mods})"


# ---------------------------------------------------------------------------
# homogenization / dehomogenization


def homogenize_poly(f, target_ring, x0_pos=0):
    """Homogenize f by the variable at x0_pos of target_ring (one extra var)."""
    d = f.total_degree()
    out = {}
    for e, c in f.terms:
        ne = list(e)
        ne.insert(x0_pos, d - sum(e))
        out[tuple(ne)] = target_ring.field.coerce(c)
    return target_ring.poly_from_dict(out)


def homogenize_ideal(P, x0_name="X0"):
    """Projective closure ideal: homogenized generators, saturated by X0.

    P must live in a polynomial ring (zero modulus). Every generator of the
    result is homogeneous.
    """
    from .ideals import Ideal

    alg = P.algebra
    if alg.modulus:
        raise PreconditionError("homogenize_ideal wants an ideal of a polynomial ring")
    ring = alg.ring
    hring = PolyRing((x0_name,) + ring.names, ring.field, GrevLex())
    halg = AffineAlgebra(hring)
    hgens = [homogenize_poly(g, hring, 0) for g in P.gens if not g.is_zero()]
    if not hgens:
        return Ideal(halg, ())
    ideal = Ideal(halg, tuple(hgens))
    sat, _ = ideal.saturate(hring.gen(x0_name))
    return sat


def dehomogenize(F, affine_algebra, x0_pos=0):
    """Set the homogenizing variable to 1 and read off the affine element."""
    if not F.is_homogeneous():
        raise NotHomogeneousError("dehomogenize needs a homogeneous input")
    ring = affine_algebra.ring
    d = {}
    for e, c in F.terms:
        ne = tuple(p for i, p in enumerate(e) if i != x0_pos)
        prev = d.get(ne, ring.field.zero)
        d[ne] = ring.field.add(prev, ring.field.coerce(c))
    return ring.poly_from_dict(d)


# ---------------------------------------------------------------------------
# extended Rees presentations


@dataclass
class ReesPresentation:
    """Presentation of the extended Rees algebra of an ideal.

    The presented algebra lives on (retained base vars,) y_1..y_t, u with
    grading weights deg y_i = 1, deg u = -1, deg x_j = 0. Substituting
    y_i -> f_i * T and u -> T^{-1} kills every modulus generator.
    """

    base: AffineAlgebra
    ideal_gens: tuple
    algebra: AffineAlgebra
    y_names: tuple
    u_name: str
    retained: tuple  # names of base variables kept in the presentation
    weights: tuple = field(default=())

    def grading_weight(self, f):
        """Weighted degree of a homogeneous-for-the-weights element; None if mixed."""
        degs = {
            sum(w * p for w, p in zip(self.weights, e)) for e, _ in f.terms
        }
        if len(degs) != 1:
            return None
        return degs.pop()

    def back_substitution_holds(self):
        """Check each modulus generator dies under y_i -> f_i*T, u -> T^{-1}.

        T^{-1} is realized as a fresh variable Ti with the relation T*Ti = 1;
        vanishing in the Laurent ring is membership in (base modulus, T*Ti - 1).
        """
        base_ring = self.base.ring
        names = base_ring.names + ("_T", "_Ti")
        ring = PolyRing(names, base_ring.field, GrevLex())
        n = base_ring.nvars
        T = ring.gen("_T")
        Ti = ring.gen("_Ti")
        base_images = [g.map_exponents(ring, list(range(n))) for g in base_ring.gens()]
        rel = [m.map_exponents(ring, list(range(n))) for m in self.base.modulus]
        rel.append(T * Ti - ring.one)
        gb = groebner.buchberger(rel)
        # images of the presentation variables
        images = []
        pres_ring = self.algebra.ring
        fmap = {name: g for name, g in zip(self.y_names, self.ideal_gens)}
        for name in pres_ring.names:
            if name in fmap:
                images.append(fmap[name].map_exponents(ring, list(range(n))) * T)
            elif name == self.u_name:
                images.append(Ti)
            else:
                images.append(base_images[base_ring.var_index(name)])
        for m in self.algebra.modulus:
            image = m.substitute(ring, images)
            if not groebner.normal_form(image, gb).is_zero():
                return False
        return True


def extended_rees_presentation(R, I, y_prefix="y", u_name="u"):
    """Present R[I*T, T^{-1}] by generators and relations.

    The kernel is computed by eliminating T from (P, y_i - f_i*T, u*T - 1).
    When I is generated by exactly the ring variables (maximal at the origin)
    the base variables are eliminated too, realizing the algebra on (y, u);
    otherwise they are retained with grading weight 0.
    """
    from .ideals import Ideal

    raw = tuple(I.gens)
    gens = [R.reduce(g) for g in raw]
    if all(g.is_zero() for g in gens):
        raise PreconditionError("extended Rees presentation needs a nonzero ideal")
    ring = R.ring
    t = len(gens)
    y_names = tuple(f"{y_prefix}{i+1}" for i in range(t))
    variable_case = set(raw) == set(ring.gens()) and t == ring.nvars

    # elimination ring: [T, (x if dropped)] | [(x if kept), y, u]
    drop = ("_T",) + (ring.names if variable_case else ())
    keep = (() if variable_case else ring.names) + y_names + (u_name,)
    ering = PolyRing(drop + keep, ring.field, Block(len(drop)))
    xpos = [ering.var_index(n) for n in ring.names]
    T = ering.gen("_T")
    u = ering.gen(u_name)
    rel = [m.map_exponents(ering, xpos) for m in R.modulus]
    for name, g in zip(y_names, gens):
        rel.append(ering.gen(name) - g.map_exponents(ering, xpos) * T)
    rel.append(u * T - ering.one)
    gb = groebner.buchberger(rel)

    pres_ring = PolyRing(keep, ring.field, GrevLex())
    kept_pos = {ering.var_index(n): pres_ring.var_index(n) for n in keep}
    kernel = []
    for g in gb:
        if any(g.uses_var(ering.var_index(n)) for n in drop):
            continue
        kernel.append(
            g.map_exponents(
                pres_ring, [kept_pos.get(i, 0) for i in range(ering.nvars)]
            )
        )
    algebra = AffineAlgebra(
        pres_ring, tuple(kernel), asserted=R.asserted - {"standard_graded"}
    )
    weights = tuple(
        1 if n in y_names else (-1 if n == u_name else 0) for n in pres_ring.names
    )
    pres = ReesPresentation(
        base=R,
        ideal_gens=tuple(gens),
        algebra=algebra,
        y_names=y_names,
        u_name=u_name,
        retained=() if variable_case else ring.names,
        weights=weights,
    )
    return pres


def associated_graded(pres):
    """Quotient of the presentation by (u): the associated graded ring."""
    from .ideals import Ideal

    alg = pres.algebra
    ring = alg.ring
    u = ring.gen(pres.u_name)
    mod_plus_u = Ideal(alg, alg.modulus + (u,))
    keep = tuple(n for n in ring.names if n != pres.u_name)
    elim = mod_plus_u.eliminate({pres.u_name})
    gr_ring = elim.algebra.ring
    gens = tuple(g for g in elim.gens if not g.is_zero())
    asserted = set()
    if all(g.is_homogeneous() for g in gens) and not pres.retained:
        asserted.add("standard_graded")
    return AffineAlgebra(gr_ring, gens, asserted=asserted)


def lift_to_rees(pres, f):
    """Lift an element of the base ring via x_i -> u * y_i.

    Only the variable-generated case (I maximal at the origin) is supported.
    """
    if pres.retained:
        raise PreconditionError("lift supported only when I is generated by the variables")
    ring = pres.algebra.ring
    u = ring.gen(pres.u_name)
    images = [u * ring.gen(n) for n in pres.y_names]
    return f.substitute(ring, images)


# ---------------------------------------------------------------------------
# exceptional-prime certificates


@dataclass
class ExceptionalPrimeCertificate:
    """User-supplied candidate exceptional primes with multiplicities.

    Valid iff the intersection of the symbolic powers Q_i^(m_i) equals (u)
    in the presentation and u lies in every Q_i. Primality of the Q_i and
    normality of the presentation are assertions, not conclusions.
    """

    presentation: ReesPresentation
    primes: tuple  # Ideal instances in presentation.algebra
    multiplicities: tuple
    separators: tuple = ()  # optional, parallel to primes; None entries = auto


def verify_exceptional_certificate(cert):
    """Check the certificate's defining ideal equality."""
    from .ideals import Ideal
    from .symbolic import symbolic_power

    pres = cert.presentation
    if "normal" not in pres.base.asserted:
        raise PreconditionError("certificate check requires an asserted-normal base")
    alg = pres.algebra
    u = alg.ring.gen(pres.u_name)
    u_ideal = Ideal(alg, (u,))
    seps = cert.separators or (None,) * len(cert.primes)
    pieces = []
    for Q, m, sep in zip(cert.primes, cert.multiplicities, seps):
        if not Q.contains_poly(u):
            return False
        if sep is None:
            sep = next(
                (x for x in alg.ring.gens() if not Q.contains_poly(x)), "auto"
            )
        power, _cert = symbolic_power(alg, Q, m, separator=sep)
        pieces.append(power)
    total = pieces[0]
    for p in pieces[1:]:
        total = total.intersect(p)
    return total.equals(u_ideal)


# ---------------------------------------------------------------------------
# projective-closure chart identity


def check_projective_closure_iso(P, H, x0_name="X0"):
    """Verify k[X0, x] -> S[X1/X0, ...] has kernel exactly P extended.

    P is the affine modulus ideal (in k[x]), H its homogenization (in
    k[X0, X]). The kernel is computed by saturating the graph ideal by X0
    and eliminating the projective variables.
    """
    from .ideals import Ideal

    affine_ring = P.algebra.ring
    hring = H.algebra.ring
    n = affine_ring.nvars
    # big ring: [X1..Xn (to eliminate)] | [X0, x1..xn]
    big_names = tuple(f"_{v}" for v in affine_ring.names) + (x0_name,) + affine_ring.names
    bring = PolyRing(big_names, affine_ring.field, Block(n))
    X0 = bring.gen(x0_name)
    # positions of hring vars (X0, X1..Xn) inside bring
    hpos = [bring.var_index(x0_name)] + [bring.var_index(f"_{v}") for v in affine_ring.names]
    gens = [g.map_exponents(bring, hpos) for g in H.gens]
    for v in affine_ring.names:
        gens.append(bring.gen(v) * X0 - bring.gen(f"_{v}"))
    big = Ideal(AffineAlgebra(bring), tuple(gens))
    sat, _ = big.saturate(X0)
    elim = sat.eliminate({f"_{v}" for v in affine_ring.names})
    # expected: P extended to k[X0, x]
    ering = elim.algebra.ring
    xpos = [ering.var_index(v) for v in affine_ring.names]
    expected = Ideal(elim.algebra, tuple(g.map_exponents(ering, xpos) for g in P.gens))
    return elim.equals(expected)
