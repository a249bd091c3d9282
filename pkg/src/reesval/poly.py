"""Exact multivariate polynomials: coefficient fields, term orders, rings, parsing.

Coefficients are exact: rationals by default, or residues modulo a configured
prime. Exponents are dense tuples of naturals, one entry per ring variable.
Terms are kept sorted strictly descending in the ring's active order, so the
leading term is always terms[0].
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product

from .errors import OrderError, PreconditionError, RingMismatchError


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The field of exact rationals."""

    name = "QQ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime p, residues reduced to [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


# ---------------------------------------------------------------------------
# monomial orders
#
# Each order maps an exponent tuple to a sort key; exponents compare by key.
# Bigger key = bigger monomial.


class MonomialOrder:
    kind = "?"

    def key(self, exp):
        raise NotImplementedError

    def compare(self, a, b):
        if len(a) != len(b):
            raise PreconditionError("exponent length mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @property
    def all_weights_positive(self):
        """True iff every monomial exceeds 1; required by the Groebner engine."""
        return True

    def __eq__(self, other):
        return repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class Lex(MonomialOrder):
    kind = "lex"

    def key(self, exp):
        return exp

    def __repr__(self):
        return "lex"


class GrevLex(MonomialOrder):
    kind = "grevlex"

    def key(self, exp):
        return (sum(exp), tuple(-e for e in reversed(exp)))

    def __repr__(self):
        return "grevlex"


class Block(MonomialOrder):
    """Split the variables at position k; compare the front block first.

    Used for elimination: variables to be dropped go in the front block.
    """

    kind = "block"

    def __init__(self, k, front=None, back=None):
        self.k = k
        self.front = front or GrevLex()
        self.back = back or GrevLex()

    def key(self, exp):
        return (self.front.key(exp[: self.k]), self.back.key(exp[self.k :]))

    @property
    def all_weights_positive(self):
        return self.front.all_weights_positive and self.back.all_weights_positive

    def __repr__(self):
        return f"block({self.k},{self.front!r},{self.back!r})"


class Weighted(MonomialOrder):
    """Weight vector first, tiebreak order second.

    A non-positive weight is only legal when flagged for Z-graded bookkeeping
    (e.g. the degree -1 marker of an extended Rees presentation); such orders
    are rejected by the Groebner engine.
    """

    kind = "weighted"

    def __init__(self, weights, tiebreak=None, zgraded=False):
        weights = tuple(weights)
        if not zgraded and any(w <= 0 for w in weights):
            raise OrderError("non-positive weight requires zgraded=True")
        self.weights = weights
        self.tiebreak = tiebreak or GrevLex()
        self.zgraded = zgraded

    def key(self, exp):
        w = sum(a * e for a, e in zip(self.weights, exp))
        return (w, self.tiebreak.key(exp))

    @property
    def all_weights_positive(self):
        return all(w > 0 for w in self.weights) and self.tiebreak.all_weights_positive

    def __repr__(self):
        return f"weighted({self.weights},{self.tiebreak!r})"


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """A polynomial ring: named variables, coefficient field, term order."""

    def __init__(self, names, field=QQ, order=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.field = field
        self.order = order or GrevLex()
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}; {self.order!r}]"

    def var_index(self, name):
        return self._index[name]

    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.monomial((0,) * self.nvars)

    def monomial(self, exp, coeff=1):
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, ((tuple(exp), c),))

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.monomial(e))
        return out

    def gen(self, name):
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return self.monomial(e)

    def poly_from_dict(self, d):
        f = self.field
        terms = [(e, c) for e, c in d.items() if c != f.zero]
        terms.sort(key=lambda t: self.order.key(t[0]), reverse=True)
        return Polynomial(self, tuple(terms))

    def with_order(self, order):
        return PolyRing(self.names, self.field, order)

    def convert(self, f):
        """Re-canonicalize a polynomial from a ring with the same variables."""
        if f.ring.names != self.names or f.ring.field != self.field:
            raise RingMismatchError("incompatible rings")
        return self.poly_from_dict(dict(f.terms))

    def parse(self, text):
        return _parse_poly(self, text)

    def monomials_up_to_degree(self, d):
        """All exponent tuples of total degree <= d (test helper)."""
        out = []
        for exp in product(range(d + 1), repeat=self.nvars):
            if sum(exp) <= d:
                out.append(exp)
        return out


class Polynomial:
    """Immutable canonical polynomial: terms sorted strictly descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    @property
    def lead_exp(self):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading term")
        return self.terms[0][1]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) <= 1

    def constant_term(self):
        zero_exp = (0,) * self.ring.nvars
        for e, c in self.terms:
            if e == zero_exp:
                return c
        return self.ring.field.zero

    def uses_var(self, i):
        return any(e[i] > 0 for e, _ in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        self._check(other)
        f = self.ring.field
        d = dict(self.terms)
        for e, c in other.terms:
            s = f.add(d.get(e, f.zero), c)
            if s == f.zero:
                d.pop(e, None)
            else:
                d[e] = s
        return self.ring.poly_from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, tuple((e, f.neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = self.ring.field
            c0 = f.coerce(other)
            if c0 == f.zero:
                return self.ring.zero
            return Polynomial(
                self.ring, tuple((e, f.mul(c, c0)) for e, c in self.terms)
            )
        self._check(other)
        f = self.ring.field
        d = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(d.get(e, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    d.pop(e, None)
                else:
                    d[e] = s
        return self.ring.poly_from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise PreconditionError("negative power")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self):
        if self.is_zero():
            return self
        f = self.ring.field
        inv = f.inv(self.lead_coeff)
        return Polynomial(self.ring, tuple((e, f.mul(c, inv)) for e, c in self.terms))

    def mul_term(self, exp, coeff):
        f = self.ring.field
        return Polynomial(
            self.ring,
            tuple(
                (tuple(a + b for a, b in zip(e, exp)), f.mul(c, coeff))
                for e, c in self.terms
            ),
        )

    # -- structure ---------------------------------------------------------

    def lowest_degree_form(self):
        """Sum of all terms of minimal total degree; homogeneous by construction."""
        if self.is_zero():
            raise PreconditionError("zero polynomial has no lowest-degree form")
        t = min(sum(e) for e, _ in self.terms)
        return Polynomial(self.ring, tuple((e, c) for e, c in self.terms if sum(e) == t))

    def substitute(self, target_ring, images):
        """Map this polynomial through var_i -> images[i] into target_ring."""
        if len(images) != self.ring.nvars:
            raise PreconditionError("one image per variable required")
        out = target_ring.zero
        for e, c in self.terms:
            term = target_ring.monomial((0,) * target_ring.nvars, c)
            for i, p in enumerate(e):
                if p:
                    term = term * images[i] ** p
            out = out + term
        return out

    def map_exponents(self, target_ring, positions):
        """Rename variables: var i of self becomes var positions[i] of target."""
        d = {}
        for e, c in self.terms:
            ne = [0] * target_ring.nvars
            for i, p in enumerate(e):
                if p:
                    ne[positions[i]] = p
            d[tuple(ne)] = target_ring.field.coerce(c)
        return target_ring.poly_from_dict(d)

    # -- equality / display --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.is_zero()
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"<{self}>"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            mono = "*".join(
                f"{self.ring.names[j]}^{p}" if p > 1 else self.ring.names[j]
                for j, p in enumerate(e)
                if p > 0
            )
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing: term ( ('+'|'-') term )*, term = coeff? ('*'? var ('^' nat)?)*

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-)")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PreconditionError(f"bad character at {pos}: {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_poly(ring, text):
    toks = _tokenize(text)
    if not toks:
        raise PreconditionError("empty polynomial")
    result = ring.zero
    i = 0
    sign = 1
    first = True
    while i < len(toks):
        if toks[i] in "+-":
            if first and toks[i] == "+":
                raise PreconditionError("leading '+'")
            sign = -1 if toks[i] == "-" else 1
            i += 1
            if first and toks[i - 1] == "-":
                pass
        elif not first:
            raise PreconditionError(f"expected '+' or '-' before {toks[i]!r}")
        first = False
        coeff = Fraction(sign)
        exp = [0] * ring.nvars
        saw_factor = False
        expect_factor = True
        while i < len(toks) and toks[i] not in "+-":
            t = toks[i]
            if t == "*":
                if not saw_factor or expect_factor:
                    raise PreconditionError("misplaced '*'")
                i += 1
                expect_factor = True
                continue
            if not expect_factor and not re.match(r"[A-Za-z_]", t):
                raise PreconditionError(f"unexpected token {t!r}")
            if re.match(r"\d", t):
                coeff *= Fraction(t)
                i += 1
            elif re.match(r"[A-Za-z_]", t):
                if t not in ring._index:
                    raise PreconditionError(f"unknown variable {t!r}")
                j = ring.var_index(t)
                power = 1
                i += 1
                if i < len(toks) and toks[i] == "^":
                    i += 1
                    if i >= len(toks) or not re.match(r"\d+$", toks[i]):
                        raise PreconditionError("'^' needs a natural number")
                    power = int(toks[i])
                    i += 1
                exp[j] += power
            else:
                raise PreconditionError(f"unexpected token {t!r}")
            saw_factor = True
            expect_factor = False
        if not saw_factor:
            raise PreconditionError("empty term")
        result = result + ring.monomial(exp, coeff)
        sign = 1
    return result
