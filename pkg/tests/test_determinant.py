import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from w22.determinant import BlockSpec, build_matrix, det_bruteforce, det_formula, double_factorial
from w22.verify import det_shapes

from conftest import nonzero_rationals


def sympy_det(matrix):
    return Fraction(str(sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                                      for r in matrix]).det()))


def test_double_factorial():
    assert double_factorial(0) == 1
    assert double_factorial(1) == 1
    assert double_factorial(3) == 12
    with pytest.raises(ValueError):
        double_factorial(-1)


def test_build_matrix_examples():
    lam, mu = Fraction(2, 3), Fraction(-5)
    assert build_matrix(BlockSpec(((lam, 1),), r=3)) == [[lam ** 3]]
    assert build_matrix(BlockSpec(((lam, 1), (mu, 1)))) == [[1, 1], [lam, mu]]
    assert build_matrix(BlockSpec(((lam, 2),))) == [[1, 0], [lam, lam]]


def test_det_bruteforce_examples():
    lam, mu = Fraction(2, 3), Fraction(-5)
    eye = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert det_bruteforce(eye) == 1
    assert det_bruteforce([[1, 1], [lam, mu]]) == mu - lam == sympy_det([[Fraction(1), Fraction(1)], [lam, mu]])
    assert det_bruteforce(build_matrix(BlockSpec(((lam, 1), (lam, 1), (mu, 1))))) == 0


def test_det_formula_examples():
    lam, mu = Fraction(2, 3), Fraction(-5)
    for r in range(4):
        assert det_formula(BlockSpec(((lam, 1),), r)) == lam ** r
    assert det_formula(BlockSpec(((lam, 1), (mu, 1)))) == mu - lam
    assert det_formula(BlockSpec(((lam, 2),))) == lam == det_bruteforce([[1, 0], [lam, lam]])


def test_bruteforce_matches_sympy():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 6)
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        assert det_bruteforce(m) == sympy_det(m)


def test_all_shapes_small():
    assert len(det_shapes(5)) == 31
    rng = random.Random(11)
    for shape in det_shapes(5):
        for r in range(4):
            for _ in range(5):
                lams = []
                while len(lams) < len(shape):
                    x = Fraction(rng.choice([i for i in range(-9, 10) if i]), rng.randint(1, 4))
                    if x not in lams:
                        lams.append(x)
                spec = BlockSpec(tuple(zip(lams, shape)), r)
                value = det_formula(spec)
                assert value != 0
                assert det_bruteforce(build_matrix(spec)) == value


def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def test_block_permutation_sign():
    blocks = ((Fraction(2), 2), (Fraction(-1, 3), 1), (Fraction(5, 2), 2))
    base = det_bruteforce(build_matrix(BlockSpec(blocks, 1)))
    cols = [(b, e) for b, (_, s) in enumerate(blocks) for e in range(s)]
    for order in permutations(range(3)):
        spec = BlockSpec(tuple(blocks[i] for i in order), 1)
        new_cols = [(i, e) for i in order for e in range(blocks[i][1])]
        sign = _perm_sign([cols.index(c) for c in new_cols])
        assert det_formula(spec) == sign * base


@settings(max_examples=25)
@given(st.lists(nonzero_rationals, min_size=1, max_size=3, unique=True),
       st.lists(st.integers(1, 3), min_size=3, max_size=3), st.integers(0, 3))
def test_formula_property(lams, sizes, r):
    spec = BlockSpec(tuple(zip(lams, sizes)), r)
    assert det_formula(spec) != 0
    assert det_bruteforce(build_matrix(spec)) == det_formula(spec)


def test_gaussian_entries():
    from w22.exact import GaussianRational
    i = GaussianRational(0, 1)
    spec = BlockSpec(((i, 2), (GaussianRational(1, 1), 1), (Fraction(-2), 1)), 2)
    assert det_bruteforce(build_matrix(spec)) == det_formula(spec)
