"""Symbolic powers of primes via saturation by a separator element.

The separator stands in for the multiplicative set complementary to the
associated primes: P^(n) = (P^n : separator^infinity). An "auto" separator
is only derived in the cases where it is provably valid; everything else
demands an explicit element and gets a randomized primariness screen.
"""

from __future__ import annotations

import random

from .errors import PreconditionError
from .ideals import Ideal
from .multiplicity import krull_dim

DEFAULT_NMAX = 12

_CACHE = {}


def clear_cache():
    _CACHE.clear()


def auto_separator(P):
    """Separator for the powers of P, or None when no saturation is needed.

    dim(R/P) = 0: the powers are already primary to the maximal ideal at
    the origin, nothing to remove. Homogeneous P with dim(R/P) = 1: the
    only possible embedded prime is the irrelevant ideal, so any variable
    outside P separates. Other shapes need an explicit element.
    """
    d = krull_dim(P)
    if d == 0:
        return None
    ring = P.algebra.ring
    if d == 1 and all(g.is_homogeneous() for g in P.gb()):
        for x in ring.gens():
            if not P.contains_poly(x):
                return x
        raise PreconditionError("every variable lies in P")
    raise PreconditionError(
        "no automatic separator for this prime; supply one explicitly"
    )


def _random_elements(algebra, P, count, seed):
    """Low-degree random elements outside P, for the primariness screen."""
    rng = random.Random(seed)
    ring = algebra.ring
    exps = [e for e in ring.monomials_up_to_degree(2) if sum(e) > 0]
    out = []
    attempts = 0
    while len(out) < count and attempts < 60 * count:
        attempts += 1
        g = ring.zero
        for e in rng.sample(exps, min(3, len(exps))):
            g = g + ring.monomial(e, rng.randint(1, 5))
        g = algebra.reduce(g)
        if not g.is_zero() and not P.contains_poly(g):
            out.append(g)
    return out


def symbolic_power(algebra, P, n, separator="auto", screen_level=3, seed=0):
    """n-th symbolic power of the (asserted) prime P, with a certificate.

    Returns (ideal, certificate). The certificate records the separator,
    the saturation exponent, a radical-membership check on the result, and
    the outcome of the primariness screen; any failure downgrades the
    status to an upper-bound candidate instead of raising.
    """
    if n < 0:
        raise PreconditionError("negative symbolic power")
    if n == 0:
        one = Ideal(algebra, (algebra.ring.one,))
        return one, {"separator": None, "saturation_steps": 0, "status": "exact"}
    key = (
        algebra.ring,
        algebra.modulus,
        P.gens,
        n,
        str(separator),
        screen_level,
        seed,
    )
    if key in _CACHE:
        return _CACHE[key]
    if n == 1:
        cert = {"separator": None, "saturation_steps": 0, "status": "exact"}
        _CACHE[key] = (P, cert)
        return P, cert
    Pn = P.power(n)
    if separator == "auto":
        separator = auto_separator(P)
    if separator is None:
        result, steps = Pn, 0
    else:
        if isinstance(separator, str):
            separator = algebra.ring.parse(separator)
        if P.contains_poly(separator):
            raise PreconditionError("separator lies in the prime")
        result, steps = Pn.saturate(separator)
    radical_ok = all(P.radical_contains(g) for g in result.gens)
    screened = 0
    screen_ok = True
    if separator is not None and screen_level > 0:
        for g in _random_elements(algebra, P, screen_level, seed):
            screened += 1
            if not result.quotient(g).equals(result):
                screen_ok = False
                break
    status = "exact" if (radical_ok and screen_ok) else "upper bound candidate"
    cert = {
        "separator": str(separator) if separator is not None else None,
        "saturation_steps": steps,
        "radical_ok": radical_ok,
        "screen_probes": screened,
        "screen_ok": screen_ok,
        "status": status,
    }
    _CACHE[key] = (result, cert)
    return result, cert


def ord_at(algebra, P, f, nmax=DEFAULT_NMAX, separator="auto", seed=0):
    """(largest n <= nmax with f in P^(n), confirmed_flag).

    confirmed_flag is False only when the sweep hit nmax while f was still
    a member, so the true order may exceed the reported value.
    """
    f = algebra.reduce(f)
    if f.is_zero():
        raise PreconditionError("ord of zero")
    order = 0
    for k in range(1, nmax + 1):
        power, _ = symbolic_power(algebra, P, k, separator=separator, seed=seed)
        if power.contains_poly(f):
            order = k
        else:
            return order, True
    return order, False


def symbolic_order_along(algebra, Q, g, nmax=DEFAULT_NMAX, separator=None, seed=0):
    """Valuation of g read off as the Q-symbolic order, Q a height-1 prime.

    The height-1 hypothesis is screened by dimension; when no separator is
    given the first variable outside Q is used (validity is left to the
    primariness screen inside symbolic_power).
    """
    ambient_dim = krull_dim(algebra)
    if krull_dim(Q) != ambient_dim - 1:
        raise PreconditionError("Q does not have height 1 in the algebra")
    if separator is None:
        for x in algebra.ring.gens():
            if not Q.contains_poly(x):
                separator = x
                break
        else:
            raise PreconditionError("every variable lies in Q")
    order, _confirmed = ord_at(algebra, Q, g, nmax=nmax, separator=separator, seed=seed)
    return order
