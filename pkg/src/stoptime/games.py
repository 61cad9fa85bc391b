"""Two-player zero-sum stopping games.

Fixing the joint stop-mass of one player turns the game into a
single-agent stopping problem on a lifted space whose outcomes are
(base outcome, opponent stop index) pairs.  The payoff uses X when
Player 1 stops strictly first, Y when Player 2 stops strictly first, and
Z on a tie, always evaluated at the time of the first stopper.

Lifted atoms of zero mass are recorded on the LiftedProblem but dropped
from the evaluation space, which requires strictly positive atoms; they
carry no payoff mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .space import AdaptedProcess, FilteredSpace
from .times import (DistributionST, MixedST, PureST, RandomizedST, ZERO,
                    validate_distribution)
from .problems import StoppingProblem, payoff


@dataclass(frozen=True)
class StoppingGame:
    space: FilteredSpace
    x: AdaptedProcess  # payoff when Player 1 stops strictly first
    y: AdaptedProcess  # payoff when Player 2 stops strictly first
    z: AdaptedProcess  # payoff on simultaneous stops

    def __post_init__(self):
        for name, table in (("x", self.x), ("y", self.y), ("z", self.z)):
            for w in self.space.outcomes:
                row = table.values.get(w)
                if row is None or len(row) != self.space.n_times:
                    raise ValueError(f"{name} row for {w!r} missing or wrong length")


@dataclass(frozen=True)
class LiftedProblem:
    """The single-agent problem one player faces given the other's stop mass."""

    base: StoppingGame
    opponent: DistributionST
    atoms: tuple           # every (outcome, stop index) pair, zero mass included
    space: FilteredSpace   # positive-mass atoms only
    problem: StoppingProblem


def _lifted_space(game: StoppingGame, delta: DistributionST) -> tuple:
    base = game.space
    atoms = tuple((w, s) for w in base.outcomes for s in range(base.n_times))
    pos = tuple(a for a in atoms if delta.mass[a[0]][a[1]] > 0)
    probs = tuple(delta.mass[w][s] for w, s in pos)
    partitions = []
    for j in range(base.n_times):
        level = []
        for block in base.partitions[j]:
            lifted = frozenset(a for a in pos if a[0] in block)
            if lifted:
                level.append(lifted)
        partitions.append(tuple(level))
    space = FilteredSpace(outcomes=pos, probs=probs, grid=base.grid,
                          partitions=tuple(partitions))
    return atoms, space


def _first_stopper_reward(xp, yp, zp, my_index, opp_index, w):
    if my_index < opp_index:
        return xp.at(w, my_index)
    if my_index > opp_index:
        return yp.at(w, opp_index)
    return zp.at(w, my_index)


def lift(game: StoppingGame, delta2: DistributionST) -> LiftedProblem:
    """The stopping problem Player 1 faces when Player 2 stops per delta2."""
    bad = validate_distribution(game.space, delta2)
    if bad:
        raise ValueError(f"opponent stop mass invalid: {bad[0]}")
    atoms, space = _lifted_space(game, delta2)
    values = {}
    for (w, s) in space.outcomes:
        values[(w, s)] = tuple(
            _first_stopper_reward(game.x, game.y, game.z, j, s, w)
            for j in range(game.space.n_times))
    problem = StoppingProblem(space, AdaptedProcess(values))
    return LiftedProblem(game, delta2, atoms, space, problem)


def lift_player2(game: StoppingGame, delta1: DistributionST) -> LiftedProblem:
    """Mirror lift: the problem Player 2 faces when Player 1 stops per delta1.

    X and Y swap roles because the lifted coordinate is now Player 1's stop.
    """
    bad = validate_distribution(game.space, delta1)
    if bad:
        raise ValueError(f"opponent stop mass invalid: {bad[0]}")
    atoms, space = _lifted_space(game, delta1)
    values = {}
    for (w, s) in space.outcomes:
        values[(w, s)] = tuple(
            _first_stopper_reward(game.y, game.x, game.z, j, s, w)
            for j in range(game.space.n_times))
    problem = StoppingProblem(space, AdaptedProcess(values))
    return LiftedProblem(game, delta1, atoms, space, problem)


def lift_pure(sigma: PureST, lifted_space: FilteredSpace) -> PureST:
    return PureST({(w, s): sigma.stop_index[w]
                   for (w, s) in lifted_space.outcomes})


def lift_mixed(mu: MixedST, lifted_space: FilteredSpace) -> MixedST:
    """Sections constant in the opponent-stop coordinate."""
    return MixedST({(w, s): mu.sections[w] for (w, s) in lifted_space.outcomes})


def lift_randomized(rho: RandomizedST,
                    lifted_space: FilteredSpace) -> RandomizedST:
    """Paths constant in the opponent-stop coordinate."""
    return RandomizedST({(w, s): rho.paths[w]
                         for (w, s) in lifted_space.outcomes})


def lift_distribution(delta: DistributionST, base: FilteredSpace,
                      lifted_space: FilteredSpace) -> DistributionST:
    """Reweight the conditional stop law of each base outcome by the
    lifted atom masses."""
    mass = {}
    for (w, s) in lifted_space.outcomes:
        p = lifted_space.prob((w, s))
        pw = base.prob(w)
        mass[(w, s)] = tuple(p * m / pw for m in delta.mass[w])
    return DistributionST(mass)


def lift_stopping_time(tau, base: FilteredSpace, lifted_space: FilteredSpace):
    if isinstance(tau, PureST):
        return lift_pure(tau, lifted_space)
    if isinstance(tau, MixedST):
        return lift_mixed(tau, lifted_space)
    if isinstance(tau, RandomizedST):
        return lift_randomized(tau, lifted_space)
    if isinstance(tau, DistributionST):
        return lift_distribution(tau, base, lifted_space)
    raise TypeError(f"not a stopping time: {type(tau).__name__}")


def game_payoff_via_lift(game: StoppingGame, tau1,
                         delta2: DistributionST) -> Fraction:
    """Player 1's payoff: evaluate the lifted stopping time on the lifted
    problem."""
    lifted = lift(game, delta2)
    return payoff(lifted.problem, lift_stopping_time(tau1, game.space, lifted.space))


def game_payoff_player2_view(game: StoppingGame, delta1: DistributionST,
                             tau2) -> Fraction:
    """Same payoff computed from Player 2's perspective."""
    lifted = lift_player2(game, delta1)
    return payoff(lifted.problem, lift_stopping_time(tau2, game.space, lifted.space))


def game_payoff_symmetric(game: StoppingGame, mu1: MixedST,
                          mu2: MixedST) -> Fraction:
    """Direct triple expectation over (outcome, r1, r2) for two mixed times."""
    space = game.space
    total = ZERO
    for w in space.outcomes:
        s1, s2 = mu1.sections[w], mu2.sections[w]
        p1 = [s1.mass_of_index(j) for j in range(space.n_times)]
        p2 = [s2.mass_of_index(j) for j in range(space.n_times)]
        inner = ZERO
        for j1, q1 in enumerate(p1):
            if q1 == 0:
                continue
            for j2, q2 in enumerate(p2):
                if q2 == 0:
                    continue
                inner += q1 * q2 * _first_stopper_reward(
                    game.x, game.y, game.z, j1, j2, w)
        total += space.prob(w) * inner
    return total
