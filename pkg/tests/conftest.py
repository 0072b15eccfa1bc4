from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from w22.exact import UniPoly
from w22.omega import OmegaParams
from w22.restricted import HighestWeightData, TrivialModule, VermaModule

settings.register_profile("w22", max_examples=40, deadline=None)
settings.load_profile("w22")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=5))
nonzero_rationals = rationals.filter(lambda x: x != 0)


def unipolys(max_degree=3):
    return st.lists(rationals, min_size=0, max_size=max_degree + 1).map(UniPoly.from_coeffs)


omega_params = st.builds(OmegaParams, nonzero_rationals, nonzero_rationals, unipolys(2))


def make_verma():
    return VermaModule(HighestWeightData(Fraction(1, 2), Fraction(3), Fraction(5, 2)))


@pytest.fixture
def verma():
    return make_verma()


@pytest.fixture
def trivial():
    return TrivialModule()


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
