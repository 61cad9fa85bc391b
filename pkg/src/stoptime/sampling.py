"""Monte Carlo realization of random stopping times.

Sampling is float-based (it feeds statistical checks only; all theorem
checks elsewhere stay exact).  Three procedures are implemented, one per
representation, and all three target the same joint law:

* mixed:        draw r uniform and read the section value;
* randomized:   draw r uniform and apply the generalized inverse of the
                cumulative path;
* distribution: draw the grid index from the outcome's conditional row.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .convert import to_distribution
from .space import FilteredSpace
from .times import DistributionST, MixedST, PureST, RandomizedST, embed_pure


class EmptySamples(ValueError):
    pass


@dataclass(frozen=True)
class SampleRecord:
    outcome: object
    grid_index: int
    replicate: int


def _draw_outcomes(space: FilteredSpace, rng: np.random.Generator,
                   n: int) -> np.ndarray:
    probs = np.array([float(p) for p in space.probs])
    probs /= probs.sum()
    return rng.choice(len(space.outcomes), size=n, p=probs)


def sample_many(space: FilteredSpace, eta, rng: np.random.Generator,
                n: int) -> list:
    """n independent draws of (outcome, stop index) under the law of eta."""
    if n <= 0:
        raise EmptySamples("need at least one sample")
    if isinstance(eta, PureST):
        eta = embed_pure(eta)
    which = _draw_outcomes(space, rng, n)
    indices = np.empty(n, dtype=np.int64)

    if isinstance(eta, MixedST):
        rs = rng.random(n)
        for i, w in enumerate(space.outcomes):
            mask = which == i
            if not mask.any():
                continue
            s = eta.sections[w]
            breaks = np.array([float(r) for r in s.breaks])
            values = np.array(s.values, dtype=np.int64)
            iv = np.searchsorted(breaks, rs[mask], side="right") - 1
            indices[mask] = values[np.clip(iv, 0, len(values) - 1)]
    elif isinstance(eta, RandomizedST):
        rs = rng.random(n)
        for i, w in enumerate(space.outcomes):
            mask = which == i
            if not mask.any():
                continue
            path = np.array([float(x) for x in eta.paths[w]])
            indices[mask] = np.searchsorted(path, rs[mask], side="left")
    elif isinstance(eta, DistributionST):
        rs = rng.random(n)
        for i, w in enumerate(space.outcomes):
            mask = which == i
            if not mask.any():
                continue
            row = np.array([float(x) for x in eta.mass[w]])
            cdf = np.cumsum(row / row.sum())
            indices[mask] = np.searchsorted(cdf, rs[mask], side="left")
    else:
        raise TypeError(f"not a samplable stopping time: {type(eta).__name__}")

    indices = np.clip(indices, 0, space.n_times - 1)
    return [SampleRecord(space.outcomes[int(i)], int(j), rep)
            for rep, (i, j) in enumerate(zip(which, indices))]


def sample_stop(space: FilteredSpace, eta, rng: np.random.Generator,
                replicate: int = 0) -> SampleRecord:
    """A single draw; see sample_many for the per-kind procedure."""
    rec = sample_many(space, eta, rng, 1)[0]
    return SampleRecord(rec.outcome, rec.grid_index, replicate)


def empirical_delta(space: FilteredSpace, samples,
                    reference: DistributionST = None):
    """Frequency table over (outcome, grid index), and when a reference
    stop law is given, the total-variation distance to it."""
    samples = list(samples)
    if not samples:
        raise EmptySamples("no samples given")
    freq = {(w, j): 0.0 for w in space.outcomes for j in range(space.n_times)}
    for rec in samples:
        freq[(rec.outcome, rec.grid_index)] += 1.0
    n = float(len(samples))
    freq = {k: v / n for k, v in freq.items()}
    if reference is None:
        return freq, None
    tv = 0.5 * sum(abs(freq[(w, j)] - float(reference.mass[w][j]))
                   for w in space.outcomes for j in range(space.n_times))
    return freq, tv


def tv_between(space: FilteredSpace, eta_a, eta_b) -> float:
    """Exact TV between the stop laws of two stopping times, as a float."""
    da = to_distribution(space, eta_a)
    db = to_distribution(space, eta_b)
    return 0.5 * sum(abs(float(da.mass[w][j]) - float(db.mass[w][j]))
                     for w in space.outcomes for j in range(space.n_times))
