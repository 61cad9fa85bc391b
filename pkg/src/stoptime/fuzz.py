"""Random instance generation for the property and acceptance suites.

Instances are built so that they are valid by construction:

* spaces get a coarse root partition that is randomly refined level by
  level, so refinement always holds;
* cumulative stop paths are built from block-constant stop fractions per
  level, so adaptedness and monotonicity always hold;
* interval representations are derived from the paths and optionally
  rearranged by a measure-preserving shuffle of a common interval
  refinement, which changes the representation but not the stop law.

All randomness flows through a numpy Generator supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .convert import delta_of_randomized, mixed_of_randomized
from .space import AdaptedProcess, FilteredSpace, build_space
from .times import (DistributionST, MixedST, PureST, RStepFunction,
                    RandomizedST, ONE, ZERO)


@dataclass(frozen=True)
class FuzzBounds:
    max_outcomes: int = 8
    max_grid_points: int = 6
    max_breaks: int = 8
    max_denominator: int = 64

    def __post_init__(self):
        if min(self.max_outcomes, self.max_grid_points,
               self.max_breaks, self.max_denominator) < 1:
            raise ValueError("all bounds must be >= 1")


@dataclass(frozen=True)
class Instance:
    """One fuzzed scenario: a space with an equivalent stopping-time
    family, an independent pure time, a reward, and game data."""

    space: FilteredSpace
    pure: PureST
    mixed: MixedST
    randomized: RandomizedST
    distribution: DistributionST
    reward: AdaptedProcess
    x: AdaptedProcess
    y: AdaptedProcess
    z: AdaptedProcess
    mixed2: MixedST
    randomized2: RandomizedST


def unit_fraction(rng: np.random.Generator, max_den: int) -> Fraction:
    den = int(rng.integers(1, max_den + 1))
    return Fraction(int(rng.integers(0, den + 1)), den)


def random_space(rng: np.random.Generator, bounds: FuzzBounds,
                 min_outcomes: int = 1) -> FilteredSpace:
    n = int(rng.integers(min_outcomes, bounds.max_outcomes + 1))
    outcomes = tuple(f"w{i + 1}" for i in range(n))

    weights = [int(rng.integers(1, bounds.max_denominator + 1)) for _ in range(n)]
    total = sum(weights)
    probs = tuple(Fraction(x, total) for x in weights)

    lo = min(2, bounds.max_grid_points) if bounds.max_grid_points > 1 else 1
    n_times = int(rng.integers(lo, bounds.max_grid_points + 1))
    grid = [ZERO]
    for _ in range(n_times - 1):
        step = Fraction(int(rng.integers(1, bounds.max_denominator + 1)),
                        bounds.max_denominator)
        grid.append(grid[-1] + step)

    # coarse root, randomly refined one level at a time
    partitions = [(frozenset(outcomes),)]
    for _ in range(n_times - 1):
        level = []
        for block in partitions[-1]:
            members = sorted(block)
            if len(members) >= 2 and rng.random() < 0.5:
                perm = [members[i] for i in rng.permutation(len(members))]
                cut = int(rng.integers(1, len(members)))
                level.append(frozenset(perm[:cut]))
                level.append(frozenset(perm[cut:]))
            else:
                level.append(block)
        partitions.append(tuple(level))
    return build_space(outcomes, probs, grid, partitions)


def random_pure(rng: np.random.Generator, space: FilteredSpace) -> PureST:
    """Stop block by block: at each level, each still-running block stops
    with probability 1/2; everything still running stops at the horizon."""
    stop = {}
    for j in range(space.n_times):
        last = j == space.last_index
        for block in space.partitions[j]:
            running = [w for w in block if w not in stop]
            if running and (last or rng.random() < 0.5):
                for w in running:
                    stop[w] = j
    return PureST(stop)


def random_randomized(rng: np.random.Generator, space: FilteredSpace,
                      bounds: FuzzBounds) -> RandomizedST:
    """Build paths from block-constant per-level stop fractions."""
    paths = {w: [] for w in space.outcomes}
    prev = {w: ZERO for w in space.outcomes}
    for j in range(space.n_times):
        last = j == space.last_index
        for block in space.partitions[j]:
            h = ONE if last else unit_fraction(rng, bounds.max_denominator)
            for w in block:
                value = prev[w] + (ONE - prev[w]) * h
                paths[w].append(value)
                prev[w] = value
    return RandomizedST({w: tuple(row) for w, row in paths.items()})


def shuffle_sections(rng: np.random.Generator, space: FilteredSpace,
                     mu: MixedST, max_breaks: int) -> MixedST:
    """Rearrange the common interval refinement of all sections with one
    shared permutation.  This preserves the stop law and joint
    measurability; skipped when it would exceed the break budget."""
    cuts = sorted({r for s in mu.sections.values() for r in s.breaks})
    n_iv = len(cuts) - 1
    if n_iv < 2 or n_iv > max_breaks:
        return mu
    perm = list(rng.permutation(n_iv))
    lengths = [cuts[i + 1] - cuts[i] for i in perm]
    breaks = [ZERO]
    for length in lengths:
        breaks.append(breaks[-1] + length)
    sections = {}
    for w, s in mu.sections.items():
        mids = [(cuts[i] + cuts[i + 1]) / 2 for i in perm]
        values = [s.value_at(r) for r in mids]
        sections[w] = RStepFunction(tuple(breaks), tuple(values)).canonical()
    return MixedST(sections)


def random_process(rng: np.random.Generator, space: FilteredSpace,
                   bounds: FuzzBounds, adapted: bool = False) -> AdaptedProcess:
    """A bounded rational table; block-constant per level when adapted."""
    def draw():
        den = int(rng.integers(1, 9))
        return Fraction(int(rng.integers(-bounds.max_denominator,
                                         bounds.max_denominator + 1)), den)

    values = {w: [None] * space.n_times for w in space.outcomes}
    for j in range(space.n_times):
        if adapted:
            for block in space.partitions[j]:
                v = draw()
                for w in block:
                    values[w][j] = v
        else:
            for w in space.outcomes:
                values[w][j] = draw()
    return AdaptedProcess({w: tuple(row) for w, row in values.items()})


def random_instance(rng: np.random.Generator,
                    bounds: FuzzBounds = FuzzBounds(),
                    min_outcomes: int = 1) -> Instance:
    space = random_space(rng, bounds, min_outcomes=min_outcomes)
    rho = random_randomized(rng, space, bounds)
    delta = delta_of_randomized(space, rho)
    mu = shuffle_sections(rng, space, mixed_of_randomized(space, rho),
                          bounds.max_breaks)
    rho2 = random_randomized(rng, space, bounds)
    mu2 = shuffle_sections(rng, space, mixed_of_randomized(space, rho2),
                           bounds.max_breaks)
    return Instance(
        space=space,
        pure=random_pure(rng, space),
        mixed=mu,
        randomized=rho,
        distribution=delta,
        reward=random_process(rng, space, bounds),
        x=random_process(rng, space, bounds),
        y=random_process(rng, space, bounds),
        z=random_process(rng, space, bounds),
        mixed2=mu2,
        randomized2=rho2,
    )


def corrupt_mixed(space: FilteredSpace, mu: MixedST):
    """Break joint measurability of one section, when the filtration has a
    multi-outcome block strictly before the horizon.  Returns the mutated
    time or None when no such block exists."""
    for j in range(space.last_index):
        for block in space.partitions[j]:
            if len(block) >= 2:
                members = sorted(block)
                w, mate = members[0], members[1]
                if mu.sections[mate].cdf(j) > 0:
                    bad = RStepFunction.constant(space.last_index)
                else:
                    bad = RStepFunction.constant(0)
                sections = dict(mu.sections)
                sections[w] = bad
                return MixedST(sections)
    return None
