"""Exact scalar tower: rationals, cyclotomic numbers, Laurent polynomials,
and truncated Laurent series in a distinguished variable t.

All values are immutable.  Every level of the tower supports +, -, *, ==,
unary -, and multiplication by int / Fraction; fields additionally support
inversion.  A small "domain" object describes each ring and provides
construction, coercion from lower levels of the tower, and the canonical
text serialization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# rationals

Rational = Fraction


def rat_show(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


def rat_parse(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# cyclotomic numbers

@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    # (x^m - 1) / prod of Phi_d over proper divisors d
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num, den):
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


class Cyclotomic:
    """Element of Q(zeta_m), stored on the power basis 1, z, ..., z^(phi(m)-1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError("expected %d coefficients for order %d" % (phi, order))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rational(r, m: int) -> "Cyclotomic":
        phi = euler_phi(m)
        return Cyclotomic(m, (Fraction(r),) + (Fraction(0),) * (phi - 1))

    @staticmethod
    def root(m: int, k: int = 1) -> "Cyclotomic":
        """zeta_m^k in reduced form."""
        k %= m
        phi = euler_phi(m)
        raw = [Fraction(0)] * (k + 1)
        raw[k] = Fraction(1)
        return Cyclotomic(m, _reduce(raw, m, phi))

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    "mixed cyclotomic orders %d and %d; embed explicitly"
                    % (self.order, other.order))
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.order)
        return NotImplemented

    def embed(self, big_order: int) -> "Cyclotomic":
        """Image in Q(zeta_M) for order | M, sending zeta_m to zeta_M^(M/m)."""
        m, big = self.order, big_order
        if big % m:
            raise ValueError("no embedding of Q(zeta_%d) into Q(zeta_%d)" % (m, big))
        step = big // m
        phi_big = euler_phi(big)
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] += c
        return Cyclotomic(big, _reduce(raw, big, phi_big))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.order, tuple(a * q for a in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        other = self._coerce(other)
        phi = len(self.coeffs)
        raw = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        return Cyclotomic(self.order, _reduce(raw, self.order, phi))

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        # invariants: s * self == r  (mod Phi_m)
        r0, s0 = mod, [Fraction(0)]
        r1, s1 = _trim(a), [Fraction(1)]
        while _degree(r1) > 0:
            q, rem = _qpolydivmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _trim(_qpolysub(s0, _qpolymul(q, s1)))
        if not r1:
            raise ZeroDivisionError("zero divisor in cyclotomic field")
        lead = r1[0]
        phi = len(self.coeffs)
        out = [c / lead for c in s1]
        out = _reduce([Fraction(c) for c in out], self.order, phi)
        return Cyclotomic(self.order, out)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = Cyclotomic.from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.order)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational cyclotomic: %s" % self)
        return self.coeffs[0]

    def __repr__(self):
        return cyc_show(self)


def _reduce(raw, m, phi):
    raw = [Fraction(c) for c in raw]
    mod = [Fraction(c) for c in cyclotomic_polynomial(m)]
    if len(raw) > phi:
        _, raw = _qpolydivmod(raw, mod)
    raw = list(raw) + [Fraction(0)] * max(0, phi - len(raw))
    return tuple(raw[:phi])


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _degree(p):
    return len(p) - 1


def _qpolymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpolysub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


def _qpolydivmod(num, den):
    num = list(num)
    dd = _degree(den)
    out = [Fraction(0)] * max(0, len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd] / den[-1]
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    return out, num[:dd]


def cyclotomic_embed(r, m: int) -> Cyclotomic:
    """The constant r inside Q(zeta_m)."""
    return Cyclotomic.from_rational(r, m)


def root_power(m: int, k: int) -> Cyclotomic:
    """zeta_m^k, canonically reduced."""
    return Cyclotomic.root(m, k)


def cyc_show(x: Cyclotomic) -> str:
    return "[%d; %s]" % (x.order, ",".join(rat_show(c) for c in x.coeffs))


def cyc_parse(s: str) -> Cyclotomic:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("bad cyclotomic literal: %r" % s)
    head, tail = s[1:-1].split(";")
    m = int(head)
    coeffs = [rat_parse(c) for c in tail.split(",")]
    return Cyclotomic(m, coeffs)


# ---------------------------------------------------------------------------
# multivariate Laurent polynomials

class LaurentPoly:
    """Sparse Laurent polynomial in nvars variables; coefficients live in any
    lower level of the scalar tower (Fraction or Cyclotomic)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for expo, c in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars:
                raise ValueError("exponent arity mismatch")
            if c == 0 if isinstance(c, (int, Fraction)) else not c:
                continue
            clean[expo] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def constant(nvars: int, c) -> "LaurentPoly":
        return LaurentPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, i: int, one) -> "LaurentPoly":
        expo = [0] * nvars
        expo[i] = 1
        return LaurentPoly(nvars, {tuple(expo): one})

    def monomial_shift(self, expo) -> "LaurentPoly":
        expo = tuple(expo)
        return LaurentPoly(self.nvars,
                           {tuple(a + b for a, b in zip(k, expo)): c
                            for k, c in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return LaurentPoly(self.nvars,
                               {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        other = self._coerce(other)
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                p = c1 * c2
                terms[k] = terms[k] + p if k in terms else p
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = LaurentPoly.constant(self.nvars, other) if other else \
                LaurentPoly(self.nvars, {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items(),
                                              key=lambda kv: kv[0]))))

    def __bool__(self):
        return bool(self.terms)

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1

    def __repr__(self):
        return lp_show(self)


def lp_show(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    bits = []
    for expo in sorted(p.terms):
        c = p.terms[expo]
        cs = rat_show(c) if isinstance(c, Fraction) else cyc_show(c)
        mono = "".join("*x%d^%d" % (i + 1, e) for i, e in enumerate(expo) if e)
        bits.append(cs + mono)
    return " + ".join(bits)


# ---------------------------------------------------------------------------
# truncated Laurent series in t

class TruncSeries:
    """Laurent series in t over a base ring, known modulo t^prec.

    prec is None for exact data (a genuine Laurent polynomial in t).  The
    zero-at-precision element stores no coefficients and no valuation.
    """

    __slots__ = ("base", "low", "prec", "coeffs")

    def __init__(self, base, low: int, prec, coeffs):
        coeffs = list(coeffs)
        if prec is not None:
            # drop coefficients at or beyond the precision horizon
            keep = prec - low
            coeffs = coeffs[:max(0, keep)]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            low += 1
        if not coeffs:
            low = 0
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("TruncSeries is immutable")

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        """Zero at the stated precision."""
        return not self.coeffs

    def valuation(self):
        return self.low if self.coeffs else None

    def coeff(self, d: int):
        i = d - self.low
        if self.coeffs and 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.base.zero()

    def degrees(self):
        return [self.low + i for i, c in enumerate(self.coeffs) if c]

    def is_polynomial(self) -> bool:
        """All stored data exact (no truncation horizon)."""
        return self.prec is None

    def max_degree(self):
        ds = self.degrees()
        return max(ds) if ds else None

    # -- construction --------------------------------------------------------

    @staticmethod
    def zero_at(base, prec) -> "TruncSeries":
        return TruncSeries(base, 0, prec, [])

    @staticmethod
    def constant(base, c, prec=None) -> "TruncSeries":
        return TruncSeries(base, 0, prec, [c])

    @staticmethod
    def monomial(base, c, deg: int, prec=None) -> "TruncSeries":
        return TruncSeries(base, deg, prec, [c])

    def with_precision(self, prec) -> "TruncSeries":
        new = _pmin(self.prec, prec)
        return TruncSeries(self.base, self.low, new, self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)) or type(other) in (Cyclotomic, LaurentPoly):
            return TruncSeries.constant(self.base, self.base.lift(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = _pmin(self.prec, other.prec)
        if not self.coeffs:
            return other.with_precision(prec)
        if not other.coeffs:
            return self.with_precision(prec)
        low = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [self.coeff(d) + other.coeff(d) for d in range(low, hi)]
        return TruncSeries(self.base, low, prec, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.base, self.low, self.prec,
                           [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or type(other) in (Cyclotomic, LaurentPoly):
            c = self.base.lift(other)
            return TruncSeries(self.base, self.low, self.prec,
                               [a * c for a in self.coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        # precision of a product: each factor contributes its valuation
        # (or its precision, when zero-at-precision) to the other's horizon
        v1 = self.low if self.coeffs else self.prec
        v2 = other.low if other.coeffs else other.prec
        p1 = _padd(self.prec, v2)
        p2 = _padd(other.prec, v1)
        prec = _pmin(p1, p2)
        if not self.coeffs or not other.coeffs:
            return TruncSeries.zero_at(self.base, prec)
        low = self.low + other.low
        out = [self.base.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.base, low, prec, out)

    __rmul__ = __mul__

    def congruent(self, other, prec=None) -> bool:
        """Equality up to the common precision (optionally further capped)."""
        other = self._coerce(other)
        p = _pmin(_pmin(self.prec, other.prec), prec)
        diff = self - other
        if not diff.coeffs:
            return True
        return p is not None and diff.low >= p

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.congruent(other)

    def __hash__(self):
        return hash((self.low, self.prec, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return ts_show(self)


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _padd(p, v):
    if p is None or v is None:
        return None
    return p + v


def series_split(s: TruncSeries):
    """Split into (degrees <= 0, degrees >= 1).  The nonpositive half is exact
    whenever the precision horizon lies beyond t^0."""
    cut = 1 - s.low
    neg = list(s.coeffs[:max(0, cut)])
    pos = list(s.coeffs[max(0, cut):])
    neg_prec = None if (s.prec is None or s.prec >= 1) else s.prec
    nonpos = TruncSeries(s.base, s.low, neg_prec, neg)
    positive = TruncSeries(s.base, max(s.low, 1), s.prec, pos)
    return nonpos, positive


def ts_show(s: TruncSeries) -> str:
    prec = "inf" if s.prec is None else str(s.prec)
    coeffs = ",".join(s.base.show(c) for c in s.coeffs)
    return "(%d, %s, [%s])" % (s.low, prec, coeffs)


# ---------------------------------------------------------------------------
# domains

class DomainQ:
    """The rationals."""

    name = "Q"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def lift(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, Cyclotomic):
            return x.as_rational()
        raise TypeError("cannot lift %r into Q" % (x,))

    def inv(self, x):
        return 1 / x

    def show(self, x):
        return rat_show(x)

    def parse(self, s):
        return rat_parse(s)

    def __eq__(self, other):
        return isinstance(other, DomainQ)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class DomainCyclotomic:
    """Q(zeta_m) on the power basis."""

    is_field = True

    def __init__(self, order: int):
        self.order = order
        self.name = "Q(z%d)" % order

    def zero(self):
        return Cyclotomic.from_rational(0, self.order)

    def one(self):
        return Cyclotomic.from_rational(1, self.order)

    def from_int(self, n):
        return Cyclotomic.from_rational(n, self.order)

    def root(self, k=1):
        return Cyclotomic.root(self.order, k)

    def lift(self, x):
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x, self.order)
        if isinstance(x, Cyclotomic):
            if x.order == self.order:
                return x
            return x.embed(self.order)
        raise TypeError("cannot lift %r into %s" % (x, self.name))

    def inv(self, x):
        return x.inv()

    def show(self, x):
        return cyc_show(x)

    def parse(self, s):
        v = cyc_parse(s)
        if v.order != self.order:
            v = v.embed(self.order)
        return v

    def __eq__(self, other):
        return isinstance(other, DomainCyclotomic) and other.order == self.order

    def __hash__(self):
        return hash(("cyc", self.order))

    def __repr__(self):
        return "DomainCyclotomic(%d)" % self.order


class DomainLaurent:
    """Laurent polynomials in nvars variables over a ground domain."""

    is_field = False

    def __init__(self, nvars: int, ground):
        self.nvars = nvars
        self.ground = ground
        self.name = "%s[x1..x%d^+-1]" % (ground.name, nvars)

    def zero(self):
        return LaurentPoly(self.nvars, {})

    def one(self):
        return LaurentPoly.constant(self.nvars, self.ground.one())

    def from_int(self, n):
        return LaurentPoly.constant(self.nvars, self.ground.from_int(n))

    def variable(self, i):
        return LaurentPoly.variable(self.nvars, i, self.ground.one())

    def lift(self, x):
        if isinstance(x, LaurentPoly):
            if x.nvars != self.nvars:
                raise TypeError("variable count mismatch")
            return LaurentPoly(self.nvars,
                               {k: self.ground.lift(c) for k, c in x.terms.items()})
        return LaurentPoly.constant(self.nvars, self.ground.lift(x))

    def inv(self, x):
        if len(x.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible: %r" % x)
        (expo, c), = x.terms.items()
        return LaurentPoly(self.nvars,
                           {tuple(-e for e in expo): self.ground.inv(c)})

    def show(self, x):
        return lp_show(x)

    def parse(self, s):
        s = s.strip()
        if s == "0":
            return self.zero()
        terms = {}
        for bit in s.split(" + "):
            parts = bit.split("*")
            c = self.ground.parse(parts[0])
            expo = [0] * self.nvars
            for p in parts[1:]:
                var, e = p.split("^")
                expo[int(var[1:]) - 1] = int(e)
            terms[tuple(expo)] = c
        return LaurentPoly(self.nvars, terms)

    def __eq__(self, other):
        return (isinstance(other, DomainLaurent)
                and other.nvars == self.nvars and other.ground == self.ground)

    def __hash__(self):
        return hash(("laurent", self.nvars, self.ground))

    def __repr__(self):
        return "DomainLaurent(%d, %r)" % (self.nvars, self.ground)


class DomainSeries:
    """Truncated Laurent series in t over a base domain."""

    is_field = False

    def __init__(self, base, default_prec=None):
        self.base = base
        self.default_prec = default_prec
        self.name = "%s((t))" % base.name

    def zero(self):
        return TruncSeries.zero_at(self.base, self.default_prec)

    def one(self):
        return TruncSeries.constant(self.base, self.base.one())

    def from_int(self, n):
        return TruncSeries.constant(self.base, self.base.from_int(n))

    def t(self, deg=1):
        return TruncSeries.monomial(self.base, self.base.one(), deg)

    def lift(self, x):
        if isinstance(x, TruncSeries):
            if x.base == self.base:
                return x
            return TruncSeries(self.base, x.low, x.prec,
                               [self.base.lift(c) for c in x.coeffs])
        return TruncSeries.constant(self.base, self.base.lift(x))

    def inv(self, x):
        raise ZeroDivisionError("series inversion is not exposed")

    def show(self, x):
        return ts_show(x)

    def parse(self, s):
        s = s.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("bad series literal: %r" % s)
        body = s[1:-1]
        low_s, rest = body.split(",", 1)
        prec_s, coeff_s = rest.split(",", 1)
        coeff_s = coeff_s.strip()
        if not (coeff_s.startswith("[") and coeff_s.endswith("]")):
            raise ValueError("bad series literal: %r" % s)
        inner = coeff_s[1:-1]
        coeffs = [self.base.parse(c) for c in _split_top(inner)] if inner else []
        prec = None if prec_s.strip() == "inf" else int(prec_s)
        return TruncSeries(self.base, int(low_s), prec, coeffs)

    def __eq__(self, other):
        return isinstance(other, DomainSeries) and other.base == self.base

    def __hash__(self):
        return hash(("series", self.base))

    def __repr__(self):
        return "DomainSeries(%r)" % (self.base,)


def _split_top(s):
    """Split a comma-joined list whose items may contain bracketed commas."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


QQ = DomainQ()
