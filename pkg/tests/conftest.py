import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from kriordan.riordan import RiordanArray, pascal
from kriordan.series import Series, shift

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-5, 5), st.sampled_from([1, 2, 3]))
nonzero_rationals = rationals.filter(bool)


@st.composite
def series(draw, trunc=None, unit=False, max_trunc=12):
    n = draw(st.integers(0, max_trunc)) if trunc is None else trunc
    cs = draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    if unit:
        cs[0] = draw(nonzero_rationals)
    return Series(cs, n)


@st.composite
def deltas(draw, trunc):
    """Series of order exactly one."""
    return shift(draw(series(trunc=trunc - 1, unit=True)), 1)


@st.composite
def riordan_arrays(draw, trunc):
    return RiordanArray(draw(series(trunc=trunc, unit=True)), draw(deltas(trunc)))


def S(text, trunc):
    """Series from an expression, for readable tests."""
    from kriordan.expr import parse_series
    return parse_series(text, trunc)


@pytest.fixture
def pascal8():
    return pascal(8)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
