"""Hilbert series, Hilbert-Samuel multiplicity, and the length sampler.

Graded multiplicities go through the leading-term ideal and a pivot
recursion on monomial ideals. Local multiplicities at the origin go
through the associated graded ring of the extended Rees presentation,
cross-checkable against finite differences of a length table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import groebner
from .errors import NotHomogeneousError, PreconditionError
from .ideals import Ideal
from .poly import GrevLex
from .rings import AffineAlgebra, associated_graded, extended_rees_presentation


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in exps:
        if not any(_divides(m, e) for m in out):
            out.append(e)
    return out


# ---------------------------------------------------------------------------
# Hilbert series of monomial quotients


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1-t)^nvars with integer numerator coefficients."""

    numerator: tuple  # coefficient i belongs to t^i
    nvars: int

    def reduced(self):
        """(numerator with all (1-t) factors cancelled, number cancelled)."""
        coeffs = list(self.numerator)
        cancelled = 0
        while coeffs and sum(coeffs) == 0:
            # divide by (1-t): partial sums, top coefficient drops off
            partial, acc = [], 0
            for c in coeffs:
                acc += c
                partial.append(acc)
            assert partial[-1] == 0
            coeffs = partial[:-1]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            cancelled += 1
        return tuple(coeffs), cancelled

    @property
    def dim(self):
        """Krull dimension of the graded quotient; -1 for the zero ring."""
        coeffs, cancelled = self.reduced()
        if not coeffs:
            return -1
        return self.nvars - cancelled

    @property
    def multiplicity(self):
        coeffs, _ = self.reduced()
        return sum(coeffs)

    def coefficients(self, upto):
        """Dimensions of the graded pieces in degrees 0..upto."""
        # expand numerator * sum binom(n-1+k, k) t^k
        from math import comb

        out = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            if c == 0 or i > upto:
                continue
            for k in range(upto - i + 1):
                out[i + k] += c * comb(self.nvars - 1 + k, k)
        return out


def _numerator(exps, nvars):
    """Numerator of HS(k[x]/(exps)) over (1-t)^nvars, as a coeff dict."""
    exps = _minimalize(exps)
    if not exps:
        return {0: 1}
    if any(sum(e) == 0 for e in exps):
        return {}
    mixed = [e for e in exps if sum(1 for p in e if p) > 1]
    if not mixed:
        # pure powers: product of (1 - t^a)
        coeffs = {0: 1}
        for e in exps:
            a = sum(e)
            nxt = {}
            for d, c in coeffs.items():
                nxt[d] = nxt.get(d, 0) + c
                nxt[d + a] = nxt.get(d + a, 0) - c
            coeffs = {d: c for d, c in nxt.items() if c}
        return coeffs
    # pivot: pure power of the first supported variable of the
    # largest-degree mixed generator (deterministic)
    g = max(mixed, key=lambda e: (sum(e), e))
    j = next(i for i, p in enumerate(g) if p)
    pivot = tuple(g[j] if i == j else 0 for i in range(nvars))
    with_pivot = _numerator(exps + [pivot], nvars)
    colon = _minimalize(
        [tuple(max(p - q, 0) for p, q in zip(e, pivot)) for e in exps]
    )
    colon_num = _numerator(colon, nvars)
    d0 = sum(pivot)
    out = dict(with_pivot)
    for d, c in colon_num.items():
        out[d + d0] = out.get(d + d0, 0) + c
    return {d: c for d, c in out.items() if c}


def hilbert_series_monomial(ring_or_ideal, exps=None):
    """Hilbert series of k[x]/(monomial ideal)."""
    if exps is None:
        ideal = ring_or_ideal
        ring = ideal.algebra.ring
        exps = []
        for g in ideal.ambient_gens():
            if len(g.terms) != 1:
                raise PreconditionError("generators must be monomials")
            exps.append(g.lead_exp)
        nvars = ring.nvars
    else:
        nvars = ring_or_ideal
    num = _numerator(list(exps), nvars)
    top = max(num) if num else 0
    coeffs = tuple(num.get(i, 0) for i in range(top + 1))
    return HilbertSeries(numerator=coeffs, nvars=nvars)


# ---------------------------------------------------------------------------
# graded and local multiplicity


def _lead_exps(algebra):
    """Leading exponents of a degree-compatible GB of the modulus."""
    if not algebra.modulus:
        return []
    ring = algebra.ring.with_order(GrevLex())
    gens = [ring.convert(m) for m in algebra.modulus]
    gb = groebner.buchberger(gens)
    return [g.lead_exp for g in gb], gb


def graded_invariants(S):
    """(multiplicity, Krull dimension) of a standard graded algebra."""
    if not S.modulus:
        return 1, S.ring.nvars
    exps, gb = _lead_exps(S)
    if any(not g.is_homogeneous() for g in gb):
        raise NotHomogeneousError("defining ideal is not homogeneous")
    hs = hilbert_series_monomial(S.ring.nvars, exps)
    e = hs.multiplicity
    if e <= 0:
        raise PreconditionError("algebra is the zero ring")
    return e, hs.dim


def multiplicity_graded(S):
    """Hilbert-Samuel multiplicity of a standard graded algebra."""
    return graded_invariants(S)[0]


def krull_dim(algebra_or_ideal):
    """Dimension of k[x]/(I + modulus) via the leading-term ideal."""
    if isinstance(algebra_or_ideal, AffineAlgebra):
        gens = algebra_or_ideal.modulus
        nvars = algebra_or_ideal.ring.nvars
        gb = algebra_or_ideal.modulus_gb()
    else:
        gens = algebra_or_ideal.ambient_gens()
        nvars = algebra_or_ideal.algebra.ring.nvars
        gb = algebra_or_ideal.gb()
    if not gens:
        return nvars
    exps = [g.lead_exp for g in gb]
    return hilbert_series_monomial(nvars, exps).dim


def local_multiplicity_via_gr(R, f=None):
    """e of the local ring at the origin of R (or of R/(f)).

    Route: extended Rees presentation of the ideal of the variables,
    associated graded ring, graded multiplicity.
    """
    for m in R.modulus:
        if m.constant_term() != R.ring.field.zero:
            raise PreconditionError("origin is not on the variety")
    modulus = R.modulus
    if f is not None:
        f = R.reduce(f)
        if f.is_zero():
            raise PreconditionError("f is zero in the algebra")
        if f.constant_term() != R.ring.field.zero:
            raise PreconditionError("f does not vanish at the origin")
        modulus = modulus + (f,)
    base = AffineAlgebra(R.ring, modulus)
    maximal = Ideal(base, tuple(base.ring.gens()))
    pres = extended_rees_presentation(base, maximal)
    gr = associated_graded(pres)
    return multiplicity_graded(gr)


# ---------------------------------------------------------------------------
# length sampler


def _standard_monomial_count(lead_exps, nvars):
    """Number of monomials outside the staircase; requires finiteness."""
    bounds = []
    for i in range(nvars):
        pures = [e[i] for e in lead_exps if all(p == 0 for j, p in enumerate(e) if j != i)]
        if not pures:
            raise PreconditionError("quotient is not zero-dimensional")
        bounds.append(min(pures))
    count = 0
    for exp in product(*(range(b) for b in bounds)):
        if not any(_divides(le, exp) for le in lead_exps):
            count += 1
    return count


def length_sampler(R, I, f=None, N=5):
    """Lengths of R/(I^n + (f) + modulus) for n = 1..N.

    Every sampled quotient must be zero-dimensional; lengths are counts
    of standard monomials of the reduced Groebner basis.
    """
    extra = (f,) if f is not None else ()
    table = []
    for n in range(1, N + 1):
        J = Ideal(R, I.power(n).gens + extra)
        gb = J.gb()
        if groebner.contains(gb, [R.ring.one]):
            table.append((n, 0))
            continue
        exps = [g.lead_exp for g in gb]
        table.append((n, _standard_monomial_count(exps, R.ring.nvars)))
    return table


def multiplicity_from_table(table, dim):
    """(e, stabilized) from a length table.

    e is the dim-th finite difference of the lengths (equivalently dim!
    times the leading coefficient of the Hilbert-Samuel polynomial);
    dim is the dimension of the ring the lengths are measured in.
    stabilized means the last three dim-th differences agree.
    """
    lengths = [entry[1] if isinstance(entry, (tuple, list)) else entry for entry in table]
    if len(lengths) < dim + 2:
        raise PreconditionError("table too short for the requested dimension")
    diffs = lengths
    for _ in range(dim):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    stabilized = len(diffs) >= 3 and diffs[-1] == diffs[-2] == diffs[-3]
    return diffs[-1], stabilized


def local_multiplicity_via_table(R, I, f=None, N=6):
    """Sampler route to the local multiplicity; refuses unstabilized tables."""
    extra = (f,) if f is not None else ()
    dim = krull_dim(Ideal(R, extra))
    table = length_sampler(R, I, f=f, N=max(N, dim + 4))
    e, stabilized = multiplicity_from_table(table, dim)
    if not stabilized:
        raise PreconditionError("length table did not stabilize; raise N")
    return e
