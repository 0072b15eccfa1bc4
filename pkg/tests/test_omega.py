from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from w22.algebra import C, L, W, basis_generators
from w22.exact import MultiPoly, UniPoly
from w22.module import module_axiom_failures
from w22.omega import (Omega2, Omega3, OmegaParams, act_omega2, act_omega3, f_map, g_map,
                       hom_space, predicted_hom, reach)

from conftest import omega_params

s, t = sympy.symbols("s t")
T = UniPoly.monomial(1)


def Q(x):
    return sympy.Rational(x.numerator, x.denominator)


def sym(poly: MultiPoly):
    return sympy.expand(sum(Q(c) * s ** e[0] * t ** e[1] for e, c in poly.terms.items()))


def sym_h(params):
    return sympy.Integer(0) + sum(Q(c) * t ** e for e, c in params.h.terms.items())


def oracle_omega3(tag, n, p, q, params):
    """Transcription of the displayed Omega(lambda, alpha, h) action."""
    lam, alpha = Q(params.lam), Q(params.alpha)
    h = sym_h(params)
    ha = h.subs(t, alpha)
    g = sympy.cancel((h - ha) / (t - alpha))

    def F(f):
        return g * f - sympy.diff(f, t)

    def G(f):
        return t * F(f) + ha * f

    if tag == "W":
        return sympy.expand(lam ** n * (t - n * alpha) * (s - n) ** p * t ** q)
    if tag == "L":
        f = t ** q
        return sympy.expand(lam ** n * (s - n) ** p * (s * f + n * G(f) - n ** 2 * alpha * F(f)))
    return 0


def test_params_validation():
    with pytest.raises(ValueError):
        OmegaParams(0, 1)
    assert OmegaParams(2, 1).simple and not OmegaParams(2, 0).simple
    assert OmegaParams(2, 1, [0, 0, 1]).g == UniPoly.from_coeffs([1, 1])


def test_f_map_examples():
    P = OmegaParams(2, 1, [0, 0, 1])
    assert f_map(UniPoly.const(1), P) == P.g
    assert f_map(T, P) == UniPoly.from_coeffs([-1, 1, 1])
    Pc = OmegaParams(2, 3, [Fraction(5, 2)])
    f = UniPoly.from_coeffs([1, 2, 3])
    assert f_map(f, Pc) == -f.derivative()


def test_g_map_examples():
    P = OmegaParams(2, 1, [0, 0, 1])
    assert g_map(UniPoly.const(1), P) == UniPoly.from_coeffs([1, 1, 1])
    assert g_map(UniPoly.const(1), OmegaParams(2, 3, [7])) == UniPoly.const(7)


@given(omega_params)
def test_g_minus_alpha_f_is_h(params):
    one = UniPoly.const(1)
    assert g_map(one, params) - f_map(one, params).scale(params.alpha) == params.h


def test_omega2_examples():
    lam, alpha = Fraction(3, 2), Fraction(-2, 5)
    M = Omega2(lam, alpha)
    for p in range(4):
        assert M.act(L(0), M.monomial(p)) == M.monomial(p + 1)
    assert M.act(L(1), M.monomial(0)) == M.monomial(1, lam) - M.monomial(0, lam * alpha)
    assert not M.act(W(5), M.monomial(3))
    assert not M.act(C, M.monomial(2))
    assert act_omega2(L(1), M.monomial(0), lam, alpha) == M.act(L(1), M.monomial(0))


def test_omega3_examples():
    P = OmegaParams(Fraction(3, 2), Fraction(-1, 3), [1, 0, 2])
    M = Omega3(P)
    for p, q in [(0, 0), (2, 3)]:
        assert M.act(L(0), M.monomial(p, q)) == M.monomial(p + 1, q)
        assert M.act(W(0), M.monomial(p, q)) == M.monomial(p, q + 1)
    lam, alpha = P.lam, P.alpha
    assert M.act(W(1), M.monomial(0, 0)) == M.monomial(0, 1, lam) - M.monomial(0, 0, lam * alpha)
    want = M.monomial(1, 0, lam) + MultiPoly(M.vars, {(0, e): lam * c for e, c in P.h.terms.items()})
    assert M.act(L(1), M.monomial(0, 0)) == want
    assert act_omega3(L(1), M.monomial(0, 0), P) == want


@settings(max_examples=15)
@given(omega_params)
def test_omega3_matches_display(params):
    M = Omega3(params)
    for n in range(-3, 4):
        for p in range(3):
            for q in range(3):
                for tag, gen in (("L", L(n)), ("W", W(n))):
                    got = sym(M.act(gen, M.monomial(p, q)))
                    assert sympy.expand(got - oracle_omega3(tag, n, p, q, params)) == 0


@settings(max_examples=3)
@given(omega_params)
def test_module_axioms(params):
    gens = basis_generators(4)
    M2 = Omega2(params.lam, params.alpha)
    assert not module_axiom_failures(M2, gens, [M2.monomial(p) for p in range(4)])
    M3 = Omega3(params)
    vecs = [M3.monomial(p, q) for p in range(4) for q in range(4)]
    assert not module_axiom_failures(M3, gens, vecs)


def test_simplicity_probe():
    P = OmegaParams(2, Fraction(1, 2), [1, -1])
    M = Omega3(P)
    for p in range(3):
        for q in range(3):
            found, _, _ = reach(M, M.monomial(p, q), M.monomial(0, 0), p + q + 3, range(0, 8))
            assert found


def test_alpha_zero_not_simple():
    # for alpha = 0 the ideal generated by t is stable under W_n
    P = OmegaParams(2, 0, [1, 1])
    M = Omega3(P)
    v = M.monomial(0, 1)
    for n in range(-4, 5):
        img = M.act(W(n), v)
        assert all(e[1] >= 1 for e in img.terms)


def test_alpha_zero_intertwiner():
    for n in range(3):
        h1 = UniPoly.from_coeffs([Fraction(1, 3), 2])
        src = Omega3(OmegaParams(3, 0, h1))
        dst = Omega3(OmegaParams(3, 0, h1 + UniPoly.const(n)))
        tn = MultiPoly.monomial(src.vars, (0, n))
        for p in range(3):
            for q in range(3):
                u = src.monomial(p, q)
                for k in range(-4, 5):
                    for gen in (L(k), W(k)):
                        assert dst.act(gen, u * tn) == src.act(gen, u) * tn


def test_hom_examples():
    vars = ("s", "t")
    A = OmegaParams(2, 1, [0, 1])
    assert hom_space(A, A, 3) == [MultiPoly.const(vars, 1)]
    assert hom_space(A, OmegaParams(3, 1, [0, 1]), 3) == []
    got = hom_space(OmegaParams(2, 0, [0, 1]), OmegaParams(2, 0, [2, 1]), 3)
    assert len(got) == 1
    t2 = MultiPoly.monomial(vars, (0, 2))
    (b,) = got
    c = b.coefficient((0, 2))
    assert c and b == t2.scale(c)


@pytest.mark.parametrize("h1, h2, alpha, dim", [
    ([0, 1], [0, 1], 1, 1),
    ([0, 1], [0, 1], 0, 1),
    ([0, 1], [1, 1], 0, 1),
    ([0, 1], [-1, 1], 0, 0),
    ([0, 1], [0, 2], 0, 0),
    ([0, 1], [1, 1], 1, 0),
])
def test_hom_matches_prediction(h1, h2, alpha, dim):
    p1, p2 = OmegaParams(2, alpha, h1), OmegaParams(2, alpha, h2)
    pred = predicted_hom(p1, p2)
    assert pred.dim == dim
    assert len(hom_space(p1, p2, 3)) == dim


def test_hom_nonconstant_flag():
    pred = predicted_hom(OmegaParams(2, 0, [0, 1]), OmegaParams(2, 0, [0, 2]))
    assert pred.dim == 0 and pred.flag == "non-constant h2-h1"
