from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from w22.algebra import C, Generator, L, LieElement, W, basis_generators, bracket, grade, pbw_key

from conftest import rationals


def oracle_bracket(x, y):
    """Defining relations written out directly on basis symbols."""
    if x.tag == "C" or y.tag == "C":
        return {}
    if x.tag == "W" and y.tag == "W":
        return {}
    if x.tag == "W":
        return {k: -c for k, c in oracle_bracket(y, x).items()}
    m, n = x.index, y.index
    out = {}
    if n - m:
        out[Generator(y.tag, m + n)] = Fraction(n - m)
    if m + n == 0 and m ** 3 - m:
        out[C] = Fraction(m ** 3 - m, 12)
    return out


def test_bracket_examples():
    assert bracket(L(2), L(-2)) == LieElement({L(0): -4, C: Fraction(1, 2)})
    assert bracket(W(3), W(-3)) == LieElement()
    assert bracket(C, L(5)) == LieElement()
    assert bracket(L(2), W(-2)) == LieElement({W(0): -4, C: Fraction(1, 2)})


def test_bracket_matches_relations():
    gens = basis_generators(5)
    for x, y in product(gens, repeat=2):
        assert bracket(x, y).terms == oracle_bracket(x, y)


def test_grade():
    assert grade(L(-3)) == -3
    assert grade(W(0)) == 0
    assert grade(C) == 0


def test_generator_equality_and_central():
    assert L(2) == Generator("L", 2)
    assert L(2) != W(2)
    assert C == Generator("C")
    with pytest.raises(ValueError):
        Generator("C", 3)


def test_pbw_order():
    assert sorted([L(1), W(1), C, L(-2), W(-2)], key=pbw_key) == [C, W(-2), L(-2), W(1), L(1)]


def test_antisymmetry_basis():
    gens = basis_generators(6)
    for x, y in product(gens, repeat=2):
        assert bracket(x, y) == -bracket(y, x)


def test_jacobi_basis():
    gens = basis_generators(4)
    for x, y, z in product(gens, repeat=3):
        assert not (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
                    + bracket(z, bracket(x, y)))


def test_grading_and_centre():
    gens = basis_generators(6)
    for x, y in product(gens, repeat=2):
        assert all(grade(g) == grade(x) + grade(y) for g in bracket(x, y).terms)
    for x in gens:
        assert not bracket(C, x)


lie_elements = st.dictionaries(
    st.builds(Generator, st.sampled_from("LW"), st.integers(-4, 4)), rationals, max_size=4
).map(LieElement)


@given(lie_elements, lie_elements, lie_elements, rationals)
def test_random_elements(x, y, z, c):
    assert bracket(x, y) == -bracket(y, x)
    assert bracket(x + y.scale(c), z) == bracket(x, z) + bracket(y, z).scale(c)
    assert not (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)))
