"""Shared fixtures: the published worked examples and small helpers."""

import math

import pytest

from nlbwm import aggregate_geometric, validate

SQRT2 = math.sqrt(2)


@pytest.fixture
def ex1():
    """Salo-Hamalainen scale, 5 criteria, best c1, worst c5."""
    return validate([1, 9, 3, 1.8571, 9], [9, 1.5, 4, 3, 1], 0, 4, scale="salo")


@pytest.fixture
def ex2():
    """Lootsma scale, 5 criteria."""
    return validate(
        [1, 16, 4 * SQRT2, 2 * SQRT2, 16],
        [16, 2 * SQRT2, 4 * SQRT2, SQRT2, 1],
        0, 4, scale="lootsma",
    )


@pytest.fixture
def ex3():
    """Donegan-Dodd-McMaster scale, 5 criteria."""
    return validate(
        [1, 5.8284, 3.2289, 1, 5.8284],
        [5.8284, 1.967, 3.2289, 1.967, 1],
        0, 4, scale="ddm7",
    )


@pytest.fixture
def ex4_members():
    """Two Saaty-scale judgments to be merged by geometric mean."""
    dm1 = validate([1, 5, 1, 3, 7], [7, 2, 7, 1, 1], 0, 4, scale="saaty")
    dm2 = validate([1, 2, 5, 2, 7], [7, 5, 3, 3, 1], 0, 4, scale="saaty")
    return [dm1, dm2]


@pytest.fixture
def ex4(ex4_members):
    return aggregate_geometric(ex4_members)


@pytest.fixture
def ex5():
    """Saaty scale, 4 criteria, maximally inconsistent for abw=2."""
    return validate([1, 1, 2, 2], [2, 1, 2, 1], 0, 3, scale="saaty")


@pytest.fixture
def ex6():
    """Two equally-preferred best criteria (c1, c2), worst c4."""
    return validate([1, 1, 2, 7], [7, 7, 3, 1], best=[0, 1], worst=3, scale="saaty")


@pytest.fixture
def ex6_single():
    """Example 6 with c1 arbitrarily selected as the single best criterion."""
    return validate([1, 1, 2, 7], [7, 7, 3, 1], best=0, worst=3, scale="saaty")


@pytest.fixture
def consistent3():
    return validate([1, 2, 4], [4, 2, 1], 0, 2)
