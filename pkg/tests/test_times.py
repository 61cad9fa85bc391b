from fractions import Fraction

import pytest

from stoptime import (DistributionST, MixedST, PureST, RStepFunction,
                      RandomizedST, delta_of_mixed, embed_pure, rn_derivative,
                      sub_measure, validate_distribution, validate_mixed,
                      validate_mixed_product, validate_mixed_sections,
                      validate_pure, validate_randomized)

F = Fraction
H = F(1, 2)


# ---------------------------------------------------------------------------
# step functions

def test_step_function_shape_checks():
    with pytest.raises(ValueError):
        RStepFunction((F(0), H), (0,))  # does not reach 1
    with pytest.raises(ValueError):
        RStepFunction((F(0), H, H, F(1)), (0, 1, 0))  # not increasing
    with pytest.raises(ValueError):
        RStepFunction((F(0), F(1)), (0, 1))  # length mismatch


def test_step_function_value_and_masses():
    s = RStepFunction((F(0), H, F(1)), (0, 2))
    assert s.value_at(F(3, 10)) == 0
    assert s.value_at(H) == 2
    assert s.value_at(1) == 2  # the point r = 1 uses the last interval
    assert s.mass_of_index(0) == H
    assert s.mass_of_index(1) == 0
    assert s.cdf(1) == H
    assert s.cdf(2) == 1


def test_canonical_merges_equal_neighbours():
    s = RStepFunction((F(0), F(1, 4), H, F(1)), (1, 1, 0))
    c = s.canonical()
    assert c.breaks == (F(0), H, F(1))
    assert c.values == (1, 0)


# ---------------------------------------------------------------------------
# pure

def test_pure_stop_at_horizon_always_valid(coin_space_coarse):
    assert validate_pure(coin_space_coarse, PureST({"w1": 1, "w2": 1})) == []


def test_pure_valid_with_full_information(coin_space):
    assert validate_pure(coin_space, PureST({"w1": 0, "w2": 1})) == []


def test_pure_invalid_on_coarse_block(coin_space_coarse):
    report = validate_pure(coin_space_coarse, PureST({"w1": 0, "w2": 1}))
    assert report and "level 0" in report[0].detail


def test_pure_index_out_of_range(coin_space):
    assert validate_pure(coin_space, PureST({"w1": 0, "w2": 7}))


# ---------------------------------------------------------------------------
# mixed

def test_mixed_valid(coin_space, coin_mixed, coin_mixed_flipped):
    assert validate_mixed(coin_space, coin_mixed) == []
    # flipping the randomizer on one outcome stays valid under full info
    assert validate_mixed(coin_space, coin_mixed_flipped) == []


def test_mixed_flipped_invalid_on_coarse_space(coin_space_coarse,
                                               coin_mixed_flipped):
    report = validate_mixed_product(coin_space_coarse, coin_mixed_flipped)
    # {r : stop by 0} is [0,1/2) vs [1/2,1); symmetric difference measure 1
    assert report and "measure 1" in report[0].detail
    assert validate_mixed_sections(coin_space_coarse, coin_mixed_flipped)


def test_mixed_plain_still_valid_on_coarse_space(coin_space_coarse, coin_mixed):
    assert validate_mixed(coin_space_coarse, coin_mixed) == []


def test_mixed_section_off_grid(coin_space):
    mu = MixedST({"w1": RStepFunction.constant(5),
                  "w2": RStepFunction.constant(0)})
    assert validate_mixed(coin_space, mu)


# ---------------------------------------------------------------------------
# randomized

def test_randomized_stop_now(coin_space):
    rho = RandomizedST({"w1": (F(1), F(1)), "w2": (F(1), F(1))})
    assert validate_randomized(coin_space, rho) == []


def test_randomized_coin_path_valid(coin_space, coin_randomized):
    assert validate_randomized(coin_space, coin_randomized) == []


def test_randomized_not_monotone(coin_space):
    rho = RandomizedST({"w1": (F(1), H), "w2": (F(1), H)})
    codes = {v.code for v in validate_randomized(coin_space, rho)}
    assert "NotMonotone" in codes
    assert "TerminalNotOne" in codes


def test_randomized_not_adapted(coin_space_coarse):
    rho = RandomizedST({"w1": (H, F(1)), "w2": (F(0), F(1))})
    codes = {v.code for v in validate_randomized(coin_space_coarse, rho)}
    assert "NotAdapted" in codes


# ---------------------------------------------------------------------------
# distribution

def test_distribution_uniform_valid(coin_space, coin_delta):
    assert validate_distribution(coin_space, coin_delta) == []


def test_distribution_point_mass_at_horizon(coin_space_coarse):
    delta = DistributionST({"w1": (F(0), H), "w2": (F(0), H)})
    assert validate_distribution(coin_space_coarse, delta) == []


def test_distribution_density_not_adapted(coin_space_coarse):
    delta = DistributionST({"w1": (H, F(0)), "w2": (F(0), H)})
    codes = {v.code for v in validate_distribution(coin_space_coarse, delta)}
    assert "DensityNotAdapted" in codes


def test_distribution_marginal_mismatch(coin_space):
    delta = DistributionST({"w1": (H, H), "w2": (F(0), F(1, 4))})
    codes = {v.code for v in validate_distribution(coin_space, delta)}
    assert "MarginalMismatch" in codes


def test_distribution_negative_mass(coin_space):
    delta = DistributionST({"w1": (F(-1, 4), F(3, 4)), "w2": (F(0), H)})
    codes = {v.code for v in validate_distribution(coin_space, delta)}
    assert "NegativeMass" in codes


# ---------------------------------------------------------------------------
# embedding and densities

def test_embed_pure_constant_sections(coin_space):
    mu = embed_pure(PureST({"w1": 0, "w2": 1}))
    assert mu.sections["w1"] == RStepFunction.constant(0)
    assert validate_mixed(coin_space, mu) == []


def test_embed_pure_pushes_point_masses(coin_space):
    sigma = PureST({"w1": 0, "w2": 1})
    delta = delta_of_mixed(coin_space, embed_pure(sigma))
    assert delta.mass["w1"] == (H, F(0))
    assert delta.mass["w2"] == (F(0), H)


def test_rn_derivative_uniform(coin_space, coin_delta):
    assert rn_derivative(coin_space, coin_delta, 0) == {"w1": H, "w2": H}
    assert rn_derivative(coin_space, coin_delta, 1) == {"w1": F(1), "w2": F(1)}


def test_rn_derivative_point_mass(coin_space):
    delta = DistributionST({"w1": (F(0), H), "w2": (F(0), H)})
    assert rn_derivative(coin_space, delta, 0) == {"w1": F(0), "w2": F(0)}


def test_sub_measure_dominated(coin_space, coin_delta):
    sub = sub_measure(coin_space, coin_delta, 0)
    assert sub.mass == {"w1": F(1, 4), "w2": F(1, 4)}
    assert sub.total() == H
