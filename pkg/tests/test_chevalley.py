import random
from fractions import Fraction

import pytest

from multiloop.chevalley import (ChevalleyError, ad_matrix,
                                 build_chevalley_by_type,
                                 diagram_automorphism, exp_ad,
                                 inner_automorphism, killing_form,
                                 torus_automorphism)
from multiloop.rootsys import build_root_system
from multiloop.scalars import QQ

from conftest import algebra

DIMS = {("A", 1): 3, ("A", 2): 8, ("B", 2): 10, ("G", 2): 14,
        ("A", 3): 15, ("D", 4): 28}


def test_dimensions():
    for (t, r), d in DIMS.items():
        assert algebra(t, r).dim == d


def _n_magnitudes(alg):
    mags = set()
    nroots = len(alg.roots)
    for (i, j), terms in alg.table.items():
        if i >= nroots or j >= nroots:
            continue
        for k, c in terms:
            if k < nroots:
                mags.add(abs(c))
    return mags


def test_structure_constant_magnitudes():
    # classical bounds: |N(a,b)| = p+1 with p the string length
    assert _n_magnitudes(algebra("A", 2)) == {1}
    assert _n_magnitudes(algebra("B", 2)) == {1, 2}
    assert _n_magnitudes(algebra("G", 2)) == {1, 2, 3}
    assert _n_magnitudes(algebra("A", 3)) == {1}


def test_constants_are_integers():
    for t, r in DIMS:
        for terms in algebra(t, r).table.values():
            for _, c in terms:
                assert isinstance(c, int)


def test_coroot_action():
    # [h_a, e_a] = 2 e_a for every root a
    for t, r in [("A", 2), ("B", 2), ("G", 2)]:
        alg = algebra(t, r)
        for a in alg.roots:
            e = alg.root_vector(QQ, a)
            f = alg.root_vector(QQ, tuple(-x for x in a))
            h = alg.bracket(QQ, e, f)
            he = alg.bracket(QQ, h, e)
            assert he == [2 * x for x in e]
            hf = alg.bracket(QQ, h, f)
            assert hf == [-2 * x for x in f]


def test_non_reduced_rejected():
    with pytest.raises(ChevalleyError):
        from multiloop.chevalley import ChevalleyAlgebra
        ChevalleyAlgebra(build_root_system("BC", 2))


def test_killing_form_sl2_oracle():
    # basis order: e_a, e_{-a}, h; K(h,h) = 8, K(e,f) = 4, K(e,e) = 0
    alg = algebra("A", 1)
    K = killing_form(alg)
    assert K[2][2] == 8
    assert K[0][1] == K[1][0] == 4
    assert K[0][0] == K[1][1] == 0
    assert K[0][2] == K[2][0] == 0


def test_killing_form_invariance():
    alg = algebra("A", 2)
    K = killing_form(alg)
    sigma = diagram_automorphism(alg, [1, 0])
    d = alg.dim
    cols = [sigma.apply(alg.basis_vector(QQ, j)) for j in range(d)]

    def kf(x, y):
        return sum(x[i] * K[i][j] * y[j] for i in range(d) for j in range(d)
                   if K[i][j])

    for i in range(d):
        for j in range(d):
            assert kf(cols[i], cols[j]) == K[i][j]


def test_exp_ad_sl2_oracle():
    # with basis (e, f, h): exp(ad_{cf}) e = e - c^2 f - c h,
    # f fixed, h -> h + 2 c f
    alg = algebra("A", 1)
    c = Fraction(3, 2)
    f = [QQ.zero(), c, QQ.zero()]
    sigma = exp_ad(QQ, alg, f)
    assert sigma.apply([1, 0, 0]) == [Fraction(1), -c * c, -c]
    assert sigma.apply([0, 1, 0]) == [0, Fraction(1), 0]
    assert sigma.apply([0, 0, 1]) == [0, 2 * c, Fraction(1)]


def test_exp_ad_inverse():
    alg = algebra("B", 2)
    rng = random.Random(5)
    for _ in range(10):
        v = [QQ.zero()] * alg.dim
        a = alg.roots[rng.randrange(len(alg.roots))]
        v[alg.root_index[a]] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        sigma = exp_ad(QQ, alg, v)
        tau = exp_ad(QQ, alg, [-x for x in v])
        assert sigma.compose(tau).is_identity()


def test_exp_ad_preserves_bracket_randomized():
    rng = random.Random(11)
    for t, r in [("A", 2), ("B", 2), ("G", 2)]:
        alg = algebra(t, r)
        for _ in range(5):
            a = alg.roots[rng.randrange(len(alg.roots))]
            v = [QQ.zero()] * alg.dim
            v[alg.root_index[a]] = Fraction(rng.randint(-4, 4))
            sigma = exp_ad(QQ, alg, v, check=False)
            for _ in range(6):
                x = [Fraction(rng.randint(-2, 2)) for _ in range(alg.dim)]
                y = [Fraction(rng.randint(-2, 2)) for _ in range(alg.dim)]
                lhs = sigma.apply(alg.bracket(QQ, x, y))
                rhs = alg.bracket(QQ, sigma.apply(x), sigma.apply(y))
                assert lhs == rhs


def test_nonnilpotent_rejected():
    alg = algebra("A", 1)
    h = alg.cartan_vector(QQ, 0)
    with pytest.raises(ChevalleyError):
        exp_ad(QQ, alg, h)


def test_diagram_automorphism_orders():
    a2 = algebra("A", 2)
    assert diagram_automorphism(a2, [1, 0]).order() == 2
    a3 = algebra("A", 3)
    assert diagram_automorphism(a3, [2, 1, 0]).order() == 2


def test_diagram_automorphism_identity_perm():
    a2 = algebra("A", 2)
    sigma = diagram_automorphism(a2, [0, 1])
    assert sigma.is_identity()


def test_diagram_automorphism_bad_perm():
    a3 = algebra("A", 3)
    with pytest.raises(ChevalleyError):
        diagram_automorphism(a3, [1, 0, 2])  # not a Cartan symmetry


def test_torus_automorphism():
    alg = algebra("A", 2)
    sigma = torus_automorphism(alg, QQ, [Fraction(-1), Fraction(1)])
    assert sigma.order() == 2
    e1 = alg.root_vector(QQ, alg.rs.simple_roots[0])
    assert sigma.apply(e1) == [-x for x in e1]
    with pytest.raises(ZeroDivisionError):
        torus_automorphism(alg, QQ, [Fraction(0), Fraction(1)])


def test_inner_automorphism_composition():
    alg = algebra("A", 2)
    a = alg.roots[0]
    v = [QQ.zero()] * alg.dim
    v[alg.root_index[a]] = Fraction(2)
    sigma = inner_automorphism(
        alg, QQ, [("exp", v), ("torus", [Fraction(2), Fraction(1)])])
    assert not sigma.is_identity()
    assert sigma.compose(sigma.inverse()).is_identity()


def test_ad_matrix_trace_free():
    alg = algebra("A", 2)
    for i in range(alg.dim):
        M = ad_matrix(QQ, alg, alg.basis_vector(QQ, i))
        assert sum(M[k][k] for k in range(alg.dim)) == 0


def test_q_degree():
    alg = algebra("A", 2)
    for i, a in enumerate(alg.roots):
        assert alg.q_degree(i) == tuple(
            alg.rs.pairing(a, s) for s in alg.rs.simple_roots)
    for i in range(len(alg.roots), alg.dim):
        assert alg.q_degree(i) == (0, 0)


def test_serialize_contains_constants():
    alg = algebra("A", 1)
    text = alg.serialize()
    assert text.startswith("chevalley A1 dim=3")
    assert "basis" in text
