import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multiloop.scalars import (QQ, Cyclotomic, DomainCyclotomic, DomainLaurent,
                               DomainSeries, LaurentPoly, TruncSeries,
                               cyclotomic_polynomial, euler_phi, series_split)

# hand-checked cyclotomic polynomials, low degree first
PHI_TABLE = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}


def test_cyclotomic_polynomial_oracle():
    for m, want in PHI_TABLE.items():
        got = tuple(cyclotomic_polynomial(m))
        assert got == want, (m, got)


def test_euler_phi_oracle():
    want = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 8: 4, 9: 6, 12: 4, 30: 8}
    for m, v in want.items():
        assert euler_phi(m) == v


def _embed_numeric(x: Cyclotomic) -> complex:
    z = cmath.exp(2j * math.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
       st.integers(-5, 5))
@settings(max_examples=60, deadline=None)
def test_cyclotomic_numeric_oracle(a0, a1, b0, b1):
    m = 12
    x = Cyclotomic(m, [Fraction(a0), Fraction(a1), Fraction(0), Fraction(0)])
    y = Cyclotomic(m, [Fraction(b0), Fraction(0), Fraction(b1), Fraction(0)])
    for got, want in [
        (x + y, _embed_numeric(x) + _embed_numeric(y)),
        (x * y, _embed_numeric(x) * _embed_numeric(y)),
        (x - y, _embed_numeric(x) - _embed_numeric(y)),
    ]:
        assert abs(_embed_numeric(got) - want) < 1e-9


def test_cyclotomic_inverse():
    dom = DomainCyclotomic(5)
    z = dom.root()
    x = z * 2 + dom.one() * 3 - z * z
    assert x * x.inv() == dom.one()
    with pytest.raises(ZeroDivisionError):
        dom.zero().inv()


def test_cyclotomic_root_relation():
    # zeta_4^2 = -1, zeta_6 satisfies z^2 = z - 1
    z4 = Cyclotomic.root(4)
    assert z4 * z4 == Cyclotomic.from_rational(-1, 4)
    z6 = Cyclotomic.root(6)
    assert z6 * z6 == z6 - Cyclotomic.from_rational(1, 6)


def test_cyclotomic_embed():
    z3 = Cyclotomic.root(3)
    z6 = Cyclotomic.root(6)
    assert z3.embed(6) == z6 * z6


cyc12 = st.builds(
    lambda cs: Cyclotomic(12, [Fraction(c) for c in cs]),
    st.lists(st.integers(-9, 9), min_size=4, max_size=4))


@given(cyc12, cyc12, cyc12)
@settings(max_examples=50, deadline=None)
def test_cyclotomic_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


lp2 = st.builds(
    lambda items: LaurentPoly(2, {k: Fraction(v) for k, v in items if v}),
    st.lists(st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                       st.integers(-5, 5)), max_size=4))


@given(lp2, lp2, lp2)
@settings(max_examples=50, deadline=None)
def test_laurent_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_laurent_monomial_inverse():
    dom = DomainLaurent(2, QQ)
    mono = LaurentPoly(2, {(1, -2): Fraction(3)})
    assert mono * dom.inv(mono) == dom.one()
    with pytest.raises(ZeroDivisionError):
        dom.inv(dom.one() + dom.variable(0))


def test_series_precision_law():
    # prec(a*b) = min(p_a + val_b, p_b + val_a)
    a = TruncSeries(QQ, -1, 4, [Fraction(1), Fraction(2)])
    b = TruncSeries(QQ, 2, 7, [Fraction(3)])
    assert (a * b).prec == min(4 + 2, 7 + (-1))
    exact = TruncSeries(QQ, 0, None, [Fraction(5)])
    assert (a * exact).prec == 4
    assert (exact * exact).prec is None


def test_series_addition_precision():
    a = TruncSeries(QQ, 0, 3, [Fraction(1), Fraction(1), Fraction(1)])
    b = TruncSeries(QQ, 0, 5, [Fraction(1)] * 5)
    s = a + b
    assert s.prec == 3
    assert s.coeff(0) == 2 and s.coeff(2) == 2


def test_series_congruent():
    a = TruncSeries(QQ, 0, None, [Fraction(1), Fraction(2), Fraction(3)])
    b = TruncSeries(QQ, 0, 2, [Fraction(1), Fraction(2), Fraction(99)])
    assert a.congruent(b)          # agree below the horizon t^2
    assert not a.congruent(b, prec=None) or b.prec == 2
    c = TruncSeries(QQ, 0, 2, [Fraction(1), Fraction(5)])
    assert not a.congruent(c)


def test_series_split():
    s = TruncSeries(QQ, -2, 5, [Fraction(1), Fraction(0), Fraction(2),
                                Fraction(3), Fraction(0), Fraction(0),
                                Fraction(4)])
    nonpos, pos = series_split(s)
    assert nonpos.prec is None                 # exact: horizon is past t^0
    assert nonpos.degrees() == [-2, 0]
    assert pos.low >= 1 and pos.prec == 5
    assert (nonpos + pos).congruent(s)


def test_series_split_low_precision():
    s = TruncSeries(QQ, -1, 0, [Fraction(7)])
    nonpos, pos = series_split(s)
    assert nonpos.prec == 0                    # horizon below t^1: stays fuzzy
    assert pos.is_zero()


@given(st.integers(-4, 2), st.lists(st.integers(-9, 9), min_size=1,
                                    max_size=5),
       st.one_of(st.none(), st.integers(0, 6)))
@settings(max_examples=60, deadline=None)
def test_series_show_parse_roundtrip(low, cs, prec):
    dom = DomainSeries(QQ)
    s = TruncSeries(QQ, low, prec, [Fraction(c) for c in cs])
    back = dom.parse(dom.show(s))
    assert back.low == s.low and back.prec == s.prec and back.coeffs == s.coeffs


def test_domain_show_parse_roundtrips():
    dq = QQ
    for x in [Fraction(0), Fraction(-7, 3), Fraction(22)]:
        assert dq.parse(dq.show(x)) == x
    dc = DomainCyclotomic(8)
    for x in [dc.zero(), dc.root() * 3 - dc.one(), dc.root(3)]:
        assert dc.parse(dc.show(x)) == x
    dl = DomainLaurent(2, QQ)
    for x in [dl.zero(), dl.one(), dl.variable(0) * dl.inv(dl.variable(1)) * 5
              + dl.one() * Fraction(1, 2)]:
        assert dl.parse(dl.show(x)) == x


def test_series_cross_coercion():
    dom = DomainSeries(DomainLaurent(1, QQ))
    x = dom.base.variable(0)
    s = dom.t(2) * x + dom.one()
    assert s.coeff(2) == x
    assert s.coeff(0) == dom.base.one()


def test_domain_series_inv_refuses():
    dom = DomainSeries(QQ)
    with pytest.raises(ZeroDivisionError):
        dom.inv(dom.one() + dom.t())
