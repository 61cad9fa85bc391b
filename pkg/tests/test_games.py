from fractions import Fraction

import numpy as np
import pytest

from stoptime import (AdaptedProcess, DistributionST, PureST, StoppingGame,
                      delta_of_mixed, equivalent, game_payoff_player2_view,
                      game_payoff_symmetric, game_payoff_via_lift, lift,
                      lift_mixed, lift_randomized)
from stoptime import fuzz

F = Fraction
H = F(1, 2)


@pytest.fixture
def coin_game(coin_space):
    # distinct tables so any indexing mistake shows up in values
    x = AdaptedProcess.from_table({"w1": (F(10), F(11)), "w2": (F(12), F(13))})
    y = AdaptedProcess.from_table({"w1": (F(20), F(21)), "w2": (F(22), F(23))})
    z = AdaptedProcess.from_table({"w1": (F(30), F(31)), "w2": (F(32), F(33))})
    return StoppingGame(coin_space, x, y, z)


@pytest.fixture
def const_game(coin_space):
    c = AdaptedProcess.constant(coin_space, F(5))
    return StoppingGame(coin_space, c, c, c)


def point_mass_at(space, j):
    rows = {}
    for w in space.outcomes:
        row = [F(0)] * space.n_times
        row[j] = space.prob(w)
        rows[w] = tuple(row)
    return DistributionST(rows)


def test_lift_point_mass_at_horizon(coin_game, coin_space):
    delta2 = point_mass_at(coin_space, 1)
    lifted = lift(coin_game, delta2)
    # two positive atoms, both with opponent stop at the horizon
    assert set(lifted.space.outcomes) == {("w1", 1), ("w2", 1)}
    assert len(lifted.atoms) == 4
    # before the horizon Player 1 is first (X); at the horizon a tie (Z)
    assert lifted.problem.reward.at(("w1", 1), 0) == F(10)
    assert lifted.problem.reward.at(("w1", 1), 1) == F(31)


def test_lift_constant_game(const_game, coin_space, coin_delta):
    lifted = lift(const_game, coin_delta)
    assert len(lifted.space.outcomes) == 4
    assert all(v == F(5) for row in lifted.problem.reward.values.values()
               for v in row)


def test_lift_uniform_delta_four_atoms(coin_game, coin_delta):
    lifted = lift(coin_game, coin_delta)
    assert len(lifted.space.outcomes) == 4
    assert all(lifted.space.prob(a) == F(1, 4) for a in lifted.space.outcomes)


def test_game_payoff_constant(const_game, coin_mixed, coin_delta):
    assert game_payoff_via_lift(const_game, coin_mixed, coin_delta) == F(5)
    assert game_payoff_symmetric(const_game, coin_mixed, coin_mixed) == F(5)


def test_game_payoff_both_stop_at_zero(coin_game, coin_space):
    sigma = PureST({"w1": 0, "w2": 0})
    from stoptime import embed_pure
    mu0 = embed_pure(sigma)
    delta0 = point_mass_at(coin_space, 0)
    expected = H * F(30) + H * F(32)  # E[Z at time 0]
    assert game_payoff_via_lift(coin_game, mu0, delta0) == expected
    assert game_payoff_symmetric(coin_game, mu0, mu0) == expected


def test_game_payoff_opponent_stops_at_zero(coin_game, coin_space, coin_mixed):
    # Player 1 uniform over {0,1}; ties at 0 give Z_0, stopping at 1 means
    # Player 2 already stopped at 0, giving Y_0
    delta0 = point_mass_at(coin_space, 0)
    expected = H * (H * F(30) + H * F(20)) + H * (H * F(32) + H * F(22))
    assert game_payoff_via_lift(coin_game, coin_mixed, delta0) == expected


def test_symmetric_matches_lift(coin_game, coin_mixed, coin_space):
    from stoptime import embed_pure
    mu2 = embed_pure(PureST({"w1": 0, "w2": 0}))
    delta2 = delta_of_mixed(coin_space, mu2)
    assert (game_payoff_symmetric(coin_game, coin_mixed, mu2)
            == game_payoff_via_lift(coin_game, coin_mixed, delta2))


def test_player2_view_constant(const_game, coin_mixed, coin_delta):
    assert game_payoff_player2_view(const_game, coin_delta, coin_mixed) == F(5)


def test_player2_view_matches_symmetric(coin_game, coin_space, coin_mixed,
                                        coin_mixed_flipped):
    delta1 = delta_of_mixed(coin_space, coin_mixed)
    assert (game_payoff_player2_view(coin_game, delta1, coin_mixed_flipped)
            == game_payoff_symmetric(coin_game, coin_mixed, coin_mixed_flipped))


def test_lift_preserves_equivalence(coin_game, coin_space, coin_mixed,
                                    coin_randomized, coin_delta):
    lifted = lift(coin_game, coin_delta)
    mu_l = lift_mixed(coin_mixed, lifted.space)
    rho_l = lift_randomized(coin_randomized, lifted.space)
    assert equivalent(lifted.space, mu_l, rho_l)


def test_lift_rejects_invalid_opponent(coin_game):
    bad = DistributionST({"w1": (F(1), F(0)), "w2": (F(0), F(0))})
    with pytest.raises(ValueError):
        lift(coin_game, bad)


def test_zero_sum_negation_fuzzed():
    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(20):
        inst = fuzz.random_instance(rng)
        game = StoppingGame(inst.space, inst.x, inst.y, inst.z)
        neg = StoppingGame(
            inst.space,
            AdaptedProcess({w: tuple(-v for v in row)
                            for w, row in inst.x.values.items()}),
            AdaptedProcess({w: tuple(-v for v in row)
                            for w, row in inst.y.values.items()}),
            AdaptedProcess({w: tuple(-v for v in row)
                            for w, row in inst.z.values.items()}))
        val = game_payoff_symmetric(game, inst.mixed, inst.mixed2)
        assert game_payoff_symmetric(neg, inst.mixed, inst.mixed2) == -val
