import random
from fractions import Fraction

import pytest

from multiloop import linalg
from multiloop.elemgroup import (ElementError, PrecisionExhausted,
                                 RankOneComponent, RootElementWord,
                                 commutator_table, depth_bound,
                                 depth_conjugation_check, extract_q_maps,
                                 factor_loop_series, root_element,
                                 torus_conjugate, unipotent_factor,
                                 word_inverse, word_matrix, word_parse,
                                 word_show)
from multiloop.grading import from_chevalley, relative_roots
from multiloop.scalars import (QQ, DomainCyclotomic, DomainLaurent,
                               DomainSeries, TruncSeries)

from conftest import algebra, place


def series(low, coeffs, prec=None):
    return TruncSeries(QQ, low, prec, [Fraction(c) for c in coeffs])


def test_zero_param_is_identity(rg_a2):
    g = rg_a2.algebra
    alpha = rg_a2.roots[0]
    m = root_element(rg_a2, QQ, alpha, [QQ.zero()] * g.dim)
    assert linalg.is_identity(QQ, m.matrix)


def test_inverse_letter(rg_a2):
    alpha = rg_a2.roots[0]
    v = place(rg_a2.algebra, QQ, alpha, Fraction(5, 3))
    x = root_element(rg_a2, QQ, alpha, v)
    xi = root_element(rg_a2, QQ, alpha, [-a for a in v])
    assert linalg.is_identity(QQ, x.mul(xi).matrix)


def test_non_root_rejected(rg_a2):
    with pytest.raises(ElementError):
        root_element(rg_a2, QQ, (9, 9), [QQ.zero()] * rg_a2.algebra.dim)


def test_inhomogeneous_rejected(rg_a2):
    v = [QQ.zero()] * rg_a2.algebra.dim
    v[0] = QQ.one()
    v[-1] = QQ.one()   # a Cartan coordinate: not on the root piece
    with pytest.raises(ElementError):
        root_element(rg_a2, QQ, rg_a2.algebra.entries[0].qdeg, v)


def _random_positive_word(rg, R, rng, lift):
    letters = []
    for gamma in rg.data.positive:
        vals = [lift(rng.randint(-5, 5))
                for _ in rg.algebra.piece(qdeg=gamma)]
        letters.append((gamma, place(rg.algebra, R, gamma, vals)))
    return letters


def test_unipotent_roundtrip_a2(rg_a2):
    rng = random.Random(3)
    for _ in range(20):
        letters = _random_positive_word(rg_a2, QQ, rng, Fraction)
        u = word_matrix(rg_a2, QQ, RootElementWord(letters))
        factors = unipotent_factor(rg_a2, QQ, u, rg_a2.data.positive)
        rebuilt = word_matrix(rg_a2, QQ, RootElementWord(factors))
        assert linalg.mat_eq(u.matrix, rebuilt.matrix)


def test_unipotent_roundtrip_bc1(rg_bc1):
    R = rg_bc1.algebra.dom
    rng = random.Random(4)
    for _ in range(20):
        letters = _random_positive_word(rg_bc1, R, rng, R.from_int)
        u = word_matrix(rg_bc1, R, RootElementWord(letters))
        factors = unipotent_factor(rg_bc1, R, u, rg_bc1.data.positive)
        rebuilt = word_matrix(rg_bc1, R, RootElementWord(factors))
        assert linalg.mat_eq(u.matrix, rebuilt.matrix)


def test_unipotent_factor_identity(rg_a2):
    from multiloop.elemgroup import ElementMatrix
    ident = ElementMatrix(linalg.identity(QQ, rg_a2.algebra.dim), QQ, None)
    assert unipotent_factor(rg_a2, QQ, ident, rg_a2.data.positive) == []


def test_unipotent_factor_simple_product(rg_a2):
    # X_b(1) X_a(1) re-sorts to X_a(1) X_b(1) X_{a+b}(c) with c = +-1
    simple = rg_a2.data.simple
    a, b = simple[0], simple[1]
    u = word_matrix(rg_a2, QQ, RootElementWord([
        (b, place(rg_a2.algebra, QQ, b, Fraction(1))),
        (a, place(rg_a2.algebra, QQ, a, Fraction(1)))]))
    factors = unipotent_factor(rg_a2, QQ, u, rg_a2.data.positive)
    by_root = {gamma: v for gamma, v in factors}
    ab = tuple(x + y for x, y in zip(a, b))
    assert set(by_root) == {a, b, ab}
    c = [x for x in by_root[ab] if x][0]
    assert abs(c) == 1


def test_non_unipotent_rejected(rg_a2):
    from multiloop.elemgroup import ElementMatrix
    m = linalg.identity(QQ, rg_a2.algebra.dim)
    m[-1][-1] = Fraction(2)
    with pytest.raises(ElementError):
        unipotent_factor(rg_a2, QQ, ElementMatrix(m, QQ, None),
                         rg_a2.data.positive)


def test_q_maps_empty_for_reduced(rg_a2):
    alpha = rg_a2.roots[0]
    v = place(rg_a2.algebra, QQ, alpha, Fraction(2))
    w = place(rg_a2.algebra, QQ, alpha, Fraction(-7, 2))
    assert extract_q_maps(rg_a2, QQ, alpha, v, w) == []


def test_q_maps_bc1(rg_bc1):
    R = rg_bc1.algebra.dom
    alpha = (1,)
    idxs = rg_bc1.algebra.piece(qdeg=alpha)
    assert len(idxs) == 2
    v = place(rg_bc1.algebra, R, alpha, [R.from_int(1), R.from_int(2)])
    w = place(rg_bc1.algebra, R, alpha, [R.from_int(3), R.from_int(-1)])
    corr = extract_q_maps(rg_bc1, R, alpha, v, w)
    assert [gamma for gamma, _ in corr] == [(2,)]
    # q correction vanishes when one argument is zero
    zero = [R.zero()] * rg_bc1.algebra.dim
    assert extract_q_maps(rg_bc1, R, alpha, v, zero) == []


def test_commutator_a2(rg_a2):
    simple = rg_a2.data.simple
    a, b = simple[0], simple[1]
    u = place(rg_a2.algebra, QQ, a, Fraction(2))
    v = place(rg_a2.algebra, QQ, b, Fraction(3))
    factors = commutator_table(rg_a2, QQ, a, b, u, v)
    assert len(factors) == 1
    gamma, w = factors[0]
    assert gamma == tuple(x + y for x, y in zip(a, b))
    c = [x for x in w if x][0]
    assert abs(c) == 6   # +- N u v with N = +-1


def test_commutator_homogeneity_a2(rg_a2):
    simple = rg_a2.data.simple
    a, b = simple[0], simple[1]
    u = place(rg_a2.algebra, QQ, a, Fraction(2))
    v = place(rg_a2.algebra, QQ, b, Fraction(3))
    base = dict(commutator_table(rg_a2, QQ, a, b, u, v))
    for c in (Fraction(2), Fraction(3), Fraction(-1)):
        got = dict(commutator_table(rg_a2, QQ, a, b,
                                    [c * x for x in u], [c * x for x in v]))
        assert set(got) == set(base)
        for gamma in base:
            i, j = 1, 1      # gamma = a + b in the open cone
            scale = c ** (i + j)
            assert got[gamma] == [scale * x for x in base[gamma]]


def test_commutator_orthogonal_roots(rg_a3):
    data = rg_a3.data
    # two orthogonal simple roots of A3 commute outright
    simples = data.simple
    pair = None
    for a in simples:
        for b in simples:
            s = tuple(x + y for x, y in zip(a, b))
            if a != b and s not in rg_a3.system.root_set:
                pair = (a, b)
    assert pair is not None
    a, b = pair
    u = place(rg_a3.algebra, QQ, a, Fraction(5))
    v = place(rg_a3.algebra, QQ, b, Fraction(7))
    assert commutator_table(rg_a3, QQ, a, b, u, v) == []


def test_commutator_opposite_rejected(rg_a2):
    a = rg_a2.roots[0]
    na = tuple(-x for x in a)
    u = place(rg_a2.algebra, QQ, a, Fraction(1))
    v = place(rg_a2.algebra, QQ, na, Fraction(1))
    with pytest.raises(ElementError):
        commutator_table(rg_a2, QQ, a, na, u, v)


def test_commutator_bc1_proportional(rg_bc1):
    R = rg_bc1.algebra.dom
    alpha = (1,)
    u = place(rg_bc1.algebra, R, alpha, [R.from_int(1), R.from_int(0)])
    v = place(rg_bc1.algebra, R, alpha, [R.from_int(0), R.from_int(1)])
    factors = commutator_table(rg_bc1, R, alpha, alpha, u, v)
    for gamma, _ in factors:
        assert gamma == (2,)


def test_torus_conjugate(rg_a2):
    alpha = rg_a2.data.simple[0]
    v = place(rg_a2.algebra, QQ, alpha, Fraction(1))
    s = [Fraction(2), Fraction(3)]
    beta, w = torus_conjugate(rg_a2, QQ, s, (alpha, v))
    assert beta == alpha
    weight = Fraction(1)
    for a, x in zip(alpha, s):
        weight *= x ** a
    assert w == [weight * x for x in v]


def test_factor_single_letter_split(rg_a2):
    # X(t^-1 + t^2) = X(t^2) X(t^-1) when the root piece is one-dimensional
    R = DomainSeries(QQ)
    alpha = rg_a2.data.simple[0]
    v = place(rg_a2.algebra, R, alpha, series(-1, [1, 0, 0, 1]))
    g1, g2, cert = factor_loop_series(
        rg_a2, R, RootElementWord([(alpha, v)]), 8)
    assert cert.residual_identity and not cert.dropped
    assert len(g1) == 1 and len(g2) == 1
    (a1, v1), = g1.letters
    (a2_, v2), = g2.letters
    assert a1 == alpha and a2_ == alpha
    assert [x for x in v1 if x][0].degrees() == [2]
    assert [x for x in v2 if x][0].degrees() == [-1]


def test_factor_residual_verifies(rg_a2):
    R = DomainSeries(QQ)
    rng = random.Random(9)
    roots = rg_a2.roots
    for _ in range(5):
        letters = []
        for _ in range(rng.randint(1, 4)):
            alpha = roots[rng.randrange(len(roots))]
            s = series(rng.randint(-2, 0),
                       [rng.randint(-3, 3) for _ in range(4)])
            letters.append((alpha, place(rg_a2.algebra, R, alpha, s)))
        word = RootElementWord(letters)
        g1, g2, cert = factor_loop_series(rg_a2, R, word, 8)
        assert cert.precision >= 8 and cert.residual_identity
        for _, v in g1:
            for x in v:
                if x:
                    assert x.valuation() >= 0
        for _, v in g2:
            for x in v:
                assert x.is_polynomial()
        total = RootElementWord(list(g1.letters) + list(g2.letters))
        res = word_matrix(rg_a2, R, word_inverse(total)).mul(
            word_matrix(rg_a2, R, word))
        ident = linalg.identity(R, rg_a2.algebra.dim)
        for i in range(rg_a2.algebra.dim):
            for j in range(rg_a2.algebra.dim):
                d = res.matrix[i][j] - ident[i][j]
                if d:
                    assert d.valuation() is None or d.low >= 8


def test_factor_nonnegative_word_stays_in_g1(rg_a2):
    R = DomainSeries(QQ)
    alpha = rg_a2.data.simple[0]
    v = place(rg_a2.algebra, R, alpha, series(0, [1, 2]))
    g1, g2, cert = factor_loop_series(
        rg_a2, R, RootElementWord([(alpha, v)]), 8)
    assert len(g2) == 0
    # per-letter splitting may emit the constant and positive parts separately
    assert 1 <= len(g1) <= 2
    assert all(a == alpha for a, _ in g1)


def test_factor_rank_one_refused(a1):
    rg = relative_roots(from_chevalley(a1))
    R = DomainSeries(QQ)
    alpha = rg.roots[0]
    v = place(rg.algebra, R, alpha, series(-1, [1]))
    with pytest.raises(RankOneComponent):
        factor_loop_series(rg, R, RootElementWord([(alpha, v)]), 8)


def test_factor_precision_exhausted(rg_a2):
    R = DomainSeries(QQ)
    alpha = rg_a2.data.simple[0]
    v = place(rg_a2.algebra, R, alpha, series(-1, [1, 1], prec=3))
    with pytest.raises(PrecisionExhausted):
        factor_loop_series(rg_a2, R, RootElementWord([(alpha, v)]), 8)


def test_depth_bound_value(rg_a2):
    assert depth_bound(rg_a2, 2, 1) == 3 * (2 + 6)
    assert depth_bound(rg_a2, 1, 0) == 3


def test_depth_conjugation(rg_a2):
    R = DomainSeries(QQ)
    rng = random.Random(17)
    alpha = rg_a2.data.simple[0]
    u = place(rg_a2.algebra, R, alpha, series(0, [2]))
    samples = []
    for _ in range(5):
        beta = rg_a2.roots[rng.randrange(len(rg_a2.roots))]
        w = place(rg_a2.algebra, R, beta,
                  series(0, [rng.randint(-3, 3)]))
        samples.append((beta, w))
    M, n = 2, 1
    N = depth_bound(rg_a2, M, n)
    assert depth_conjugation_check(rg_a2, R, alpha, n, u, N, M, samples)
    # too shallow: degree-0 contamination shows up below t^M
    assert not depth_conjugation_check(rg_a2, R, alpha, 0, u, 0, 1,
                                       [(alpha2, place(rg_a2.algebra, R,
                                                       alpha2, series(0, [1])))
                                        for alpha2 in [rg_a2.data.simple[1]]])


def test_word_show_parse_roundtrip(rg_a2):
    R = DomainSeries(QQ)
    alpha = rg_a2.data.simple[0]
    beta = rg_a2.data.simple[1]
    word = RootElementWord([
        (alpha, place(rg_a2.algebra, R, alpha, series(-2, [1, 0, 3]))),
        (beta, place(rg_a2.algebra, R, beta, series(1, [5], prec=4))),
    ])
    text = word_show(rg_a2, R, word)
    back = word_parse(rg_a2, R, text)
    assert back.ring_tag == word.ring_tag
    assert len(back) == len(word)
    for (a, v), (b, w) in zip(word, back):
        assert a == b
        for x, y in zip(v, w):
            assert (not x and not y) or (x.low == y.low and x.prec == y.prec
                                         and x.coeffs == y.coeffs)


def test_factor_laurent_ground(rg_a2):
    base = DomainLaurent(1, QQ)
    R = DomainSeries(base)
    x = base.variable(0)
    alpha = rg_a2.data.simple[0]
    s = TruncSeries(base, -1, None, [x, base.one()])
    v = place(rg_a2.algebra, R, alpha, s)
    g1, g2, cert = factor_loop_series(
        rg_a2, R, RootElementWord([(alpha, v)]), 8)
    assert cert.residual_identity
    for _, v2 in g2:
        for y in v2:
            assert y.is_polynomial()
