"""Fuzzed property campaigns and the Monte Carlo law check.

Every instance gets its own RNG stream derived from (seed, instance id)
by seed-sequence spawn keys, so results do not depend on execution order
or worker count; reports are assembled keyed by instance id and sorted
before serialization.
"""

from __future__ import annotations

import concurrent.futures
import io
from dataclasses import dataclass, replace

import numpy as np

from . import convert, demo, fuzz, games, problems, sampling
from .space import FilteredSpace
from .times import (MixedST, embed_pure, rn_derivative, validate_distribution,
                    validate_mixed_product, validate_mixed_sections,
                    validate_pure, validate_randomized)

CSV_HEADER = "instance,check,status,witness"

# offset so the Monte Carlo stream can never collide with an instance stream
MC_STREAM = 1 << 32


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 0
    n_instances: int = 200
    n_samples: int = 100_000
    max_outcomes: int = 8
    max_grid_points: int = 6
    max_breaks: int = 8
    max_denominator: int = 64
    tv_tolerance: float = 0.01
    jobs: int = 1

    def __post_init__(self):
        if self.n_instances < 1 or self.n_samples < 1 or self.jobs < 1:
            raise ValueError("counts must be positive")
        if self.tv_tolerance <= 0:
            raise ValueError("tv_tolerance must be positive")

    def bounds(self) -> fuzz.FuzzBounds:
        return fuzz.FuzzBounds(
            max_outcomes=self.max_outcomes,
            max_grid_points=self.max_grid_points,
            max_breaks=self.max_breaks,
            max_denominator=self.max_denominator)


@dataclass(frozen=True)
class CheckRow:
    instance: str
    check: str
    status: str  # "pass" | "fail"
    witness: str = ""


@dataclass(frozen=True)
class ExperimentReport:
    rows: tuple
    n_failed: int

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for row in self.rows:
            witness = row.witness.replace('"', "'")
            if "," in witness:
                witness = f'"{witness}"'
            out.write(f"{row.instance},{row.check},{row.status},{witness}\n")
        return out.getvalue()

    @property
    def ok(self) -> bool:
        return self.n_failed == 0


def _rng_for(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


def _row(results: list, instance: str, check: str, ok: bool, witness: str = ""):
    results.append(CheckRow(instance, check, "pass" if ok else "fail",
                            "" if ok else witness))


def check_instance(config: ExperimentConfig, index: int) -> list:
    """Run every exact property on one fuzzed instance."""
    rng = _rng_for(config.seed, index)
    inst = fuzz.random_instance(rng, config.bounds())
    space = inst.space
    name = str(index)
    results: list = []

    # every generated object passes its validator
    reports = {
        "pure": validate_pure(space, inst.pure),
        "mixed": validate_mixed_product(space, inst.mixed),
        "randomized": validate_randomized(space, inst.randomized),
        "distribution": validate_distribution(space, inst.distribution),
    }
    bad = {k: v for k, v in reports.items() if v}
    _row(results, name, "validators", not bad, f"invalid: {bad}")

    # interval representation from a path: equivalent, matching cumulatives
    mu_from_rho = convert.mixed_of_randomized(space, inst.randomized)
    ok = convert.equivalent(space, inst.randomized, mu_from_rho)
    cdf_ok = all(
        convert.cdf_of_mixed(space, mu_from_rho, w, j) == inst.randomized.paths[w][j]
        for w in space.outcomes for j in range(space.n_times))
    _row(results, name, "path_to_intervals", ok and cdf_ok,
         f"equivalent={ok} cdf_match={cdf_ok}")

    # joint-mass round trip and uniqueness of the path representation
    rho_back = convert.randomized_of_distribution(space, inst.distribution)
    delta_back = convert.delta_of_randomized(space, rho_back)
    round_ok = all(delta_back.mass[w] == inst.distribution.mass[w]
                   for w in space.outcomes)
    unique_ok = all(rho_back.paths[w] == inst.randomized.paths[w]
                    for w in space.outcomes)
    _row(results, name, "mass_round_trip", round_ok and unique_ok,
         f"round={round_ok} unique={unique_ok}")

    # cumulative densities of the pushed-forward mass match the sections
    delta_mu = convert.delta_of_mixed(space, inst.mixed)
    dens_ok = all(
        rn_derivative(space, delta_mu, j)[w] == convert.cdf_of_mixed(
            space, inst.mixed, w, j)
        for w in space.outcomes for j in range(space.n_times))
    _row(results, name, "density_vs_cdf", dens_ok, "densities differ")

    # one payoff per equivalence class, through all routes
    problem = problems.StoppingProblem(space, inst.reward)
    vals = {
        "mixed": problems.payoff_mixed(problem, inst.mixed),
        "randomized": problems.payoff_randomized(problem, inst.randomized),
        "distribution": problems.payoff_distribution(problem, inst.distribution),
    }
    pay_ok = len(set(vals.values())) == 1
    pure_val = problems.payoff_pure(problem, inst.pure)
    emb_val = problems.payoff_mixed(problem, embed_pure(inst.pure))
    pure_ok = pure_val == emb_val
    _row(results, name, "payoff_invariance", pay_ok and pure_ok,
         f"values={[str(v) for v in vals.values()]} "
         f"pure={pure_val} embedded={emb_val}")

    # the two mixed validators agree, on the valid and on a mutated instance
    agree_valid = (bool(validate_mixed_sections(space, inst.mixed))
                   == bool(validate_mixed_product(space, inst.mixed)))
    mutated, mspace = _mutated_mixed(config, rng, inst)
    sec = validate_mixed_sections(mspace, mutated)
    prod = validate_mixed_product(mspace, mutated)
    agree_mut = bool(sec) == bool(prod) and bool(sec)
    _row(results, name, "mixed_validators_agree", agree_valid and agree_mut,
         f"valid_agree={agree_valid} mutated: sections={bool(sec)} "
         f"product={bool(prod)}")

    results.extend(_game_checks(name, inst))
    return results


def _mutated_mixed(config, rng, inst):
    """A guaranteed-invalid interval representation; drawn on a fresh
    coarse space when the instance's own space has no shared block."""
    mutated = fuzz.corrupt_mixed(inst.space, inst.mixed)
    if mutated is not None:
        return mutated, inst.space
    bounds = replace(config.bounds(), max_grid_points=max(
        2, config.max_grid_points))
    space = fuzz.random_space(rng, bounds, min_outcomes=2)
    rho = fuzz.random_randomized(rng, space, bounds)
    mu = convert.mixed_of_randomized(space, rho)
    return fuzz.corrupt_mixed(space, mu), space


def _game_checks(name: str, inst: fuzz.Instance) -> list:
    space = inst.space
    results: list = []
    game = games.StoppingGame(space, inst.x, inst.y, inst.z)
    delta2 = convert.delta_of_mixed(space, inst.mixed2)

    # both evaluation routes and both perspectives give one value
    via_lift = games.game_payoff_via_lift(game, inst.mixed, delta2)
    symmetric = games.game_payoff_symmetric(game, inst.mixed, inst.mixed2)
    delta1 = convert.delta_of_mixed(space, inst.mixed)
    p2view = games.game_payoff_player2_view(game, delta1, inst.mixed2)
    _row(results, name, "game_routes_agree",
         via_lift == symmetric == p2view,
         f"lift={via_lift} symmetric={symmetric} p2view={p2view}")

    # equivalent strategies of Player 1 cannot change the payoff
    via_rho = games.game_payoff_via_lift(game, inst.randomized, delta2)
    via_delta = games.game_payoff_via_lift(game, inst.distribution, delta2)
    _row(results, name, "game_strategy_equivalence",
         via_lift == via_rho == via_delta,
         f"mixed={via_lift} randomized={via_rho} distribution={via_delta}")

    # lifting preserves equivalence of the base pair
    lifted = games.lift(game, delta2)
    mu_l = games.lift_mixed(inst.mixed, lifted.space)
    rho_l = games.lift_randomized(inst.randomized, lifted.space)
    _row(results, name, "lift_preserves_equivalence",
         convert.equivalent(lifted.space, mu_l, rho_l),
         "lifted pair not equivalent")

    # zero-sum sanity: negating all payoff tables negates the value
    neg = games.StoppingGame(
        space,
        games.AdaptedProcess({w: tuple(-v for v in row)
                              for w, row in inst.x.values.items()}),
        games.AdaptedProcess({w: tuple(-v for v in row)
                              for w, row in inst.y.values.items()}),
        games.AdaptedProcess({w: tuple(-v for v in row)
                              for w, row in inst.z.values.items()}))
    neg_val = games.game_payoff_symmetric(neg, inst.mixed, inst.mixed2)
    _row(results, name, "zero_sum_negation", neg_val == -symmetric,
         f"negated={neg_val} original={symmetric}")
    return results


def monte_carlo_rows(config: ExperimentConfig) -> list:
    """Sample the three representations of the uniform two-state stop law
    and compare each empirical table to the exact one."""
    space = demo.coin_space()
    reference = demo.coin_uniform_delta()
    stoppers = {
        "mc_mixed": demo.coin_mixed(),
        "mc_randomized": demo.coin_randomized(),
        "mc_distribution": reference,
    }
    results: list = []
    for i, (label, eta) in enumerate(sorted(stoppers.items())):
        rng = _rng_for(config.seed, MC_STREAM + i)
        samples = sampling.sample_many(space, eta, rng, config.n_samples)
        _, tv = sampling.empirical_delta(space, samples, reference)
        _row(results, label, "tv_within_tolerance", tv <= config.tv_tolerance,
             f"tv={tv:.6f} tolerance={config.tv_tolerance}")
    return results


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    rows: list = []
    if config.jobs == 1:
        for i in range(config.n_instances):
            rows.extend(check_instance(config, i))
    else:
        with concurrent.futures.ProcessPoolExecutor(config.jobs) as pool:
            futures = {pool.submit(check_instance, config, i): i
                       for i in range(config.n_instances)}
            collected = {}
            for fut in concurrent.futures.as_completed(futures):
                collected[futures[fut]] = fut.result()
        for i in range(config.n_instances):
            rows.extend(collected[i])
    rows.extend(monte_carlo_rows(config))
    rows.sort(key=lambda r: (_instance_key(r.instance), r.check))
    n_failed = sum(1 for r in rows if r.status != "pass")
    return ExperimentReport(tuple(rows), n_failed)


def _instance_key(instance: str):
    return (0, int(instance), "") if instance.isdigit() else (1, 0, instance)
