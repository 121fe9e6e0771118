from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fm_feasible
from shizeta.lp import feasible, maximise


def _check_witness(x, strict, equalities, bound):
    assert all(abs(v) <= bound for v in x)
    for a, b in strict:
        assert sum(Fraction(c) * v for c, v in zip(a, x)) > b
    for a, b in equalities:
        assert sum(Fraction(c) * v for c, v in zip(a, x)) == b


def test_simple_systems():
    assert feasible([((2,), 0), ((-2,), -1)]) == (Fraction(1, 4),)
    assert feasible([((1,), 0), ((-1,), 0)]) is None
    # C_2: every root above level 1 is feasible, e.g. (1, 2)
    c2 = [((-1, 1), 1), ((1, 1), 1), ((2, 0), 1), ((0, 2), 1)]
    x = feasible(c2, bound=12)
    _check_witness(x, c2, [], 12)


def test_equalities():
    strict = [((1, -1, 0), 0), ((0, 1, -1), 0)]
    eq = [((1, 1, 1), 0)]
    x = feasible(strict, eq, bound=8)
    _check_witness(x, strict, eq, 8)
    assert feasible([((1, 0), 0)], [((1, 0), -1)], bound=4) is None


def test_box_matters():
    assert feasible([((1,), 5)], bound=4) is None
    assert feasible([((1,), 5)], bound=6) is not None


def test_maximise():
    # max x + y subject to x + y + s = 3 (x, y, s >= 0)
    value, z = maximise([[1, 1, 1]], [3], [1, 1, 0])
    assert value == 3


coeff = st.integers(-3, 3)


@st.composite
def systems(draw):
    dim = draw(st.integers(1, 3))
    k = draw(st.integers(1, 5))
    rows = [(tuple(draw(coeff) for _ in range(dim)), draw(st.integers(-4, 4))) for _ in range(k)]
    return dim, rows


@settings(max_examples=150, deadline=None)
@given(systems(), st.sampled_from([1, 2, 5]))
def test_feasible_matches_fourier_motzkin(system, bound):
    dim, rows = system
    x = feasible(rows, bound=bound, dim=dim)
    assert (x is not None) == fm_feasible(rows, bound, dim)
    if x is not None:
        _check_witness(x, rows, [], bound)
