from fractions import Fraction

import pytest

from w22.algebra import C, L, W, basis_generators
from w22.module import ModuleMismatch, module_axiom_failures
from w22.restricted import (HighestWeightData, TrivialModule, VermaModule, act_restricted,
                            pbw_monomials, restriction_bound)


def vectors(V, depth):
    out = [V.highest()]
    for d in range(1, depth + 1):
        out += [V.monomial(*m) for m in pbw_monomials(d)]
    return out


def test_trivial_module(trivial):
    v = trivial.highest()
    for g in basis_generators(3):
        assert not act_restricted(g, v)
    assert restriction_bound(v) == 0
    assert len(v) == 1


def test_verma_highest_weight(verma):
    d = verma.data
    v = verma.highest()
    assert verma.act(L(0), v) == v.scale(d.h_L)
    assert verma.act(W(0), v) == v.scale(d.h_W)
    for g in (L(1), L(2), W(1), W(2)):
        assert not verma.act(g, v)
    assert restriction_bound(v) == 1


def test_l1_on_lm1(verma):
    v = verma.highest()
    x = verma.monomial(L(-1))
    assert act_restricted(L(1), x) == v.scale(-2 * verma.data.h_L)


def test_w1_on_lm1(verma):
    # [W_1, L_-1] = -[L_-1, W_1] = -2 W_0
    x = verma.monomial(L(-1))
    assert verma.act(W(1), x) == verma.highest().scale(-2 * verma.data.h_W)


def test_central_action(verma):
    for x in vectors(verma, 2):
        assert verma.act(C, x) == x.scale(verma.data.c)


def test_depth_two_hand_computation(verma):
    # L_2 L_-2 L_-1 v = L_-2 L_2 L_-1 v + (-4 L_0 + c/2) L_-1 v
    #                 = 0 + (-4 (h_L - 1) + c/2) L_-1 v
    # with this sign convention [L_0, L_-1] = -L_-1, so L_-1 lowers the L_0 eigenvalue
    d = verma.data
    x = verma.monomial(L(-2), L(-1))
    want = verma.monomial(L(-1)).scale(-4 * (d.h_L - 1) + d.c / 2)
    assert verma.act(L(2), x) == want


def test_restriction_bound_examples(verma):
    x = verma.monomial(L(-2), L(-1))
    assert restriction_bound(x) == 4
    for n in range(4, 9):
        assert not verma.act(L(n), x) and not verma.act(W(n), x)


def test_restricted_property(verma):
    for x in vectors(verma, 3):
        i = restriction_bound(x)
        for n in range(i, i + 5):
            assert not verma.act(L(n), x)
            assert not verma.act(W(n), x)


def test_module_axioms_verma(verma):
    assert not module_axiom_failures(verma, basis_generators(3), vectors(verma, 2), limit=1)


def test_module_axioms_other_weight():
    V = VermaModule(HighestWeightData(Fraction(-22, 5), Fraction(-1, 3), 0))
    assert not module_axiom_failures(V, basis_generators(3), vectors(V, 2), limit=1)


def test_pbw_monomials():
    assert pbw_monomials(1) == sorted([(L(-1),), (W(-1),)])
    # depth 2: L-2, W-2, and the three products of two depth-one modes
    assert len(pbw_monomials(2)) == 5


def test_mismatch(verma, trivial):
    with pytest.raises(ModuleMismatch):
        verma.act(L(1), trivial.highest())
    other = VermaModule(HighestWeightData(1, 1, 1))
    with pytest.raises(ModuleMismatch):
        verma.highest() + other.highest()
