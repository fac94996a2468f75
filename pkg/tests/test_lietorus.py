from fractions import Fraction

import pytest

from multiloop.chevalley import torus_automorphism
from multiloop.grading import (GradedBasisVector, GradedLieAlgebra,
                               MultiloopSpec, build_multiloop,
                               q_grading_from_cartan)
from multiloop.lietorus import (check_LT1, check_LT3, check_LT4, check_LT5,
                                classify_system, lie_torus_check,
                                pairing_from_strings)
from multiloop.scalars import QQ

from conftest import algebra


def test_sl2_loop_passes(g_sl2loop):
    rep = lie_torus_check(g_sl2loop)
    assert rep.overall
    assert rep.delta_label == "A1"
    assert rep.nullity == 1


def test_sl3_loop_passes():
    alg = algebra("A", 2)
    ident = torus_automorphism(alg, QQ, [Fraction(1), Fraction(1)])
    g = build_multiloop(MultiloopSpec(alg, [ident], 1))
    h1 = [g.dom.zero()] * alg.dim
    h1[len(alg.roots)] = g.dom.one()
    h2 = [g.dom.zero()] * alg.dim
    h2[len(alg.roots) + 1] = g.dom.one()
    g = q_grading_from_cartan(g, [h1, h2])
    rep = lie_torus_check(g)
    assert rep.overall
    assert rep.delta_label == "A2"


def test_flip_passes_with_bc1(g_flip):
    rep = lie_torus_check(g_flip)
    assert rep.overall
    assert rep.delta_label == "BC1"
    assert rep.nullity == 1


def test_quaternion_fails_lt2(g_quat):
    rep = lie_torus_check(g_quat)
    assert not rep.overall
    assert not rep.verdicts["LT2"]
    assert rep.counterexamples["LT2"] == "anisotropic"
    assert "anisotropic" in rep.notes


def test_lt1_fails_on_too_small_delta(g_flip):
    ok, witness = check_LT1(g_flip, {(1,), (-1,)})
    assert not ok
    assert witness[0] == "piece" and witness[1] in {(2,), (-2,)}


def test_lt3_fails_on_sublattice():
    # identity automorphism declared with period 2: support generates 2Z != Z
    alg = algebra("A", 1)
    ident = torus_automorphism(alg, QQ, [Fraction(1)])
    g = build_multiloop(MultiloopSpec(alg, [ident], 2))
    ok, witness = check_LT3(g)
    assert not ok


def test_lt5_fails_on_abelian():
    entries = [
        GradedBasisVector((1,), (), [Fraction(1), Fraction(0), Fraction(0)]),
        GradedBasisVector((-1,), (), [Fraction(0), Fraction(1), Fraction(0)]),
        GradedBasisVector((0,), (), [Fraction(0), Fraction(0), Fraction(1)]),
    ]
    g = GradedLieAlgebra(QQ, 0, 1, entries, {})
    ok, witness = check_LT5(g)
    assert not ok


def test_lt4_witnesses_reverify(g_flip):
    rep = lie_torus_check(g_flip)
    dom = g_flip.dom
    support = {e.qdeg for e in g_flip.entries if e.qdeg != (0,) * g_flip.qrank}
    assert rep.witnesses
    for alpha, lam, ei, f_shown in rep.witnesses:
        e = [dom.one() if t == ei else dom.zero() for t in range(g_flip.dim)]
        f = [dom.parse(s) for s in f_shown]
        h = g_flip.bracket(e, f)
        he = g_flip.bracket(h, e)
        assert he == [x * 2 for x in e]
        hf = g_flip.bracket(h, f)
        assert hf == [x * (-2) for x in f]
        # eigenvalue identity on every basis vector
        for k, ent in enumerate(g_flip.entries):
            expect = 0 if ent.qdeg == (0,) else \
                pairing_from_strings(ent.qdeg, alpha, support)
            x = [dom.one() if t == k else dom.zero()
                 for t in range(g_flip.dim)]
            hx = g_flip.bracket(h, x)
            assert hx == [xi * expect for xi in x]


def test_pairing_from_strings_oracle():
    a2 = {(2, -1), (-1, 2), (1, 1), (-2, 1), (1, -2), (-1, -1)}
    assert pairing_from_strings((2, -1), (2, -1), a2) == 2
    assert pairing_from_strings((-1, 2), (2, -1), a2) == -1
    assert pairing_from_strings((1, 1), (2, -1), a2) == 1
    bc1 = {(1,), (-1,), (2,), (-2,)}
    assert pairing_from_strings((2,), (1,), bc1) == 4
    assert pairing_from_strings((1,), (2,), bc1) == 1
    assert pairing_from_strings((-1,), (1,), bc1) == -2


def test_classify_system():
    assert classify_system({(1,), (-1,)}) == "A1"
    assert classify_system({(1,), (-1,), (2,), (-2,)}) == "BC1"
    assert classify_system({(2, -1), (-1, 2), (1, 1),
                            (-2, 1), (1, -2), (-1, -1)}) == "A2"
    assert classify_system(set()) == "empty"


def test_explicit_delta_passes(g_sl2loop):
    rep = lie_torus_check(g_sl2loop, delta=[(2,), (-2,)])
    assert rep.overall


def test_lt4_counterexample_on_fat_piece():
    # two independent vectors at the same nonzero degree break LT4
    entries = [
        GradedBasisVector((1,), (), [Fraction(1), 0, 0, 0]),
        GradedBasisVector((1,), (), [Fraction(0), 1, 0, 0]),
        GradedBasisVector((-1,), (), [Fraction(0), 0, 1, 0]),
        GradedBasisVector((0,), (), [Fraction(0), 0, 0, 1]),
    ]
    g = GradedLieAlgebra(QQ, 0, 1, entries, {})
    ok, witness, _ = check_LT4(g, {(1,), (-1,)})
    assert not ok
    assert witness[0] in ("piece-dimension", "no-opposite-piece")
