"""Payoff evaluation for single-agent stopping problems.

The reward table need not be adapted; evaluation only needs the value of
the reward at each (outcome, grid time).  All four stopping-time kinds
are supported and equivalent times yield the same exact payoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .space import AdaptedProcess, FilteredSpace
from .times import (DistributionST, MixedST, PureST, RandomizedST, ZERO)


@dataclass(frozen=True)
class StoppingProblem:
    space: FilteredSpace
    reward: AdaptedProcess

    def __post_init__(self):
        for w in self.space.outcomes:
            row = self.reward.values.get(w)
            if row is None or len(row) != self.space.n_times:
                raise ValueError(f"reward row for {w!r} missing or wrong length")


def payoff_pure(problem: StoppingProblem, sigma: PureST) -> Fraction:
    space, R = problem.space, problem.reward
    return sum((space.prob(w) * R.at(w, sigma.stop_index[w])
                for w in space.outcomes), ZERO)


def payoff_mixed(problem: StoppingProblem, mu: MixedST) -> Fraction:
    space, R = problem.space, problem.reward
    total = ZERO
    for w in space.outcomes:
        s = mu.sections[w]
        inner = sum(((s.breaks[i + 1] - s.breaks[i]) * R.at(w, v)
                     for i, v in enumerate(s.values)), ZERO)
        total += space.prob(w) * inner
    return total


def payoff_randomized(problem: StoppingProblem, rho: RandomizedST) -> Fraction:
    """Stieltjes sum against the path increments; the jump at time 0 counts."""
    space, R = problem.space, problem.reward
    total = ZERO
    for w in space.outcomes:
        prev = ZERO
        inner = ZERO
        for j, x in enumerate(rho.paths[w]):
            inner += R.at(w, j) * (x - prev)
            prev = x
        total += space.prob(w) * inner
    return total


def payoff_distribution(problem: StoppingProblem, delta: DistributionST) -> Fraction:
    space, R = problem.space, problem.reward
    return sum((delta.mass[w][j] * R.at(w, j)
                for w in space.outcomes for j in range(space.n_times)), ZERO)


def payoff(problem: StoppingProblem, eta) -> Fraction:
    """Dispatch on the stopping-time kind."""
    if isinstance(eta, PureST):
        return payoff_pure(problem, eta)
    if isinstance(eta, MixedST):
        return payoff_mixed(problem, eta)
    if isinstance(eta, RandomizedST):
        return payoff_randomized(problem, eta)
    if isinstance(eta, DistributionST):
        return payoff_distribution(problem, eta)
    raise TypeError(f"not a stopping time: {type(eta).__name__}")
