from fractions import Fraction

import pytest

from stoptime import demo


@pytest.fixture
def coin_space():
    return demo.coin_space()


@pytest.fixture
def coin_space_coarse():
    return demo.coin_space_coarse()


@pytest.fixture
def coin_mixed():
    return demo.coin_mixed()


@pytest.fixture
def coin_mixed_flipped():
    return demo.coin_mixed_flipped()


@pytest.fixture
def coin_randomized():
    return demo.coin_randomized()


@pytest.fixture
def coin_delta():
    return demo.coin_uniform_delta()


def F(x):
    return Fraction(x)
