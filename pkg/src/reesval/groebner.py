"""Buchberger's algorithm, multivariate division, reduced Groebner bases.

Pair selection is fixed (normal strategy: minimal lcm degree first,
lexicographic tie-break on pair indices) so output is deterministic.
A global reduction-step budget converts runaway inputs into a clean
BudgetExceededError rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, OrderError, RingMismatchError

DEFAULT_BUDGET = 10**6

_budget = [DEFAULT_BUDGET]


def set_default_budget(n):
    _budget[0] = n


def get_default_budget():
    return _budget[0]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    polys: tuple
    reduced: bool = False

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def lead_exps(self):
        return [g.lead_exp for g in self.polys]


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = budget if budget is not None else _budget[0]

    def tick(self, n=1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceededError("reduction-step budget exhausted")


def _check_ring(ring, polys):
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError("polynomial from a different ring")
    if not ring.order.all_weights_positive:
        raise OrderError("Groebner computations need an order with 1 <= m for all monomials")


def normal_form(f, G, budget=None, selector=None, _counter=None):
    """Remainder of f on division by G; no term divisible by any lead term of G.

    selector(candidates) picks the reducer among applicable divisor indices;
    default takes the first. Against a reduced basis the result does not
    depend on this choice.
    """
    polys = G.polys if isinstance(G, GroebnerBasis) else tuple(G)
    if polys:
        _check_ring(polys[0].ring, (f,) + tuple(polys))
    ring = f.ring
    field = ring.field
    counter = _counter or _Counter(budget)
    leads = [(g.lead_exp, g.lead_coeff, g) for g in polys if not g.is_zero()]
    work = dict(f.terms)
    remainder = {}
    order_key = ring.order.key
    while work:
        e = max(work, key=order_key)
        c = work.pop(e)
        candidates = [i for i, (le, _, _) in enumerate(leads) if _divides(le, e)]
        if not candidates:
            remainder[e] = c
            continue
        i = candidates[0] if selector is None else selector(candidates)
        le, lc, g = leads[i]
        counter.tick()
        factor = field.mul(c, field.inv(lc))
        shift = _sub_exp(e, le)
        for ge, gc in g.terms[1:]:
            ne = tuple(a + b for a, b in zip(ge, shift))
            s = field.add(work.get(ne, field.zero), field.neg(field.mul(gc, factor)))
            if s == field.zero:
                work.pop(ne, None)
            else:
                work[ne] = s
    return ring.poly_from_dict(remainder)


def s_polynomial(f, g):
    lcm = _lcm(f.lead_exp, g.lead_exp)
    field = f.ring.field
    mf = f.mul_term(_sub_exp(lcm, f.lead_exp), field.inv(f.lead_coeff))
    mg = g.mul_term(_sub_exp(lcm, g.lead_exp), field.inv(g.lead_coeff))
    return mf - mg


def buchberger(gens, budget=None):
    """Reduced Groebner basis of the ideal generated by gens.

    Both standard criteria are applied: coprime lead terms, and the chain
    criterion against already-processed pairs.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    _check_ring(ring, gens)
    counter = _Counter(budget)

    basis = []
    for g in sorted(gens, key=lambda p: ring.order.key(p.lead_exp)):
        r = normal_form(g, basis, _counter=counter)
        if not r.is_zero():
            basis.append(r.monic())

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def pair_key(p):
        i, j = p
        return (sum(_lcm(basis[i].lead_exp, basis[j].lead_exp)), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        done.add((i, j))
        fi, fj = basis[i], basis[j]
        lcm = _lcm(fi.lead_exp, fj.lead_exp)
        # criterion: coprime lead terms reduce to zero
        if lcm == tuple(a + b for a, b in zip(fi.lead_exp, fj.lead_exp)):
            continue
        # chain criterion: some k with lt_k | lcm and both pairs already done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k].lead_exp, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(fi, fj), basis, _counter=counter)
        if not r.is_zero():
            basis.append(r.monic())
            t = len(basis) - 1
            for k in range(t):
                pairs.add((k, t))

    return _reduce_basis(ring, basis, counter)


def _reduce_basis(ring, basis, counter):
    # minimalize: drop members whose lead term another member's divides
    minimal = []
    for i, g in enumerate(basis):
        le = g.lead_exp
        if any(
            _divides(h.lead_exp, le) and (h.lead_exp != le or j < i)
            for j, h in enumerate(basis)
            if j != i
        ):
            continue
        minimal.append(g)
    # inter-reduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, _counter=counter).monic())
    reduced.sort(key=lambda p: ring.order.key(p.lead_exp))
    return GroebnerBasis(ring=ring, polys=tuple(reduced), reduced=True)


def contains(G, polys, budget=None):
    """True iff every element of polys reduces to zero against G."""
    counter = _Counter(budget)
    return all(normal_form(p, G, _counter=counter).is_zero() for p in polys)


def is_groebner(G, budget=None):
    """Directly verify that every S-polynomial of G reduces to zero."""
    counter = _Counter(budget)
    polys = list(G)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j])
            if not normal_form(s, polys, _counter=counter).is_zero():
                return False
    return True
