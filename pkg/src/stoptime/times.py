"""The four stopping-time representations and their validators.

All four kinds live on a FilteredSpace and take values on its grid:

* PureST         -- one grid index per outcome.
* MixedST        -- per outcome, a step function from the randomization
                    interval [0,1] to grid indices.
* RandomizedST   -- per outcome, a nondecreasing cumulative path on the
                    grid ending at 1.
* DistributionST -- an exact joint mass on outcomes x grid with marginal P.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .space import (FilteredSpace, SubMeasure, Violation, _as_fraction)

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# step functions on [0,1]

@dataclass(frozen=True)
class RStepFunction:
    """A step function on [0,1] with grid-index values.

    Intervals are half-open [r_{i-1}, r_i); the point r = 1 belongs to the
    last interval.  breaks = (0, r_1, ..., 1), values has one entry per
    interval.
    """

    breaks: tuple
    values: tuple

    def __post_init__(self):
        if len(self.breaks) != len(self.values) + 1:
            raise ValueError("breaks/values length mismatch")
        if self.breaks[0] != 0 or self.breaks[-1] != 1:
            raise ValueError("breaks must run from 0 to 1")
        for a, b in zip(self.breaks, self.breaks[1:]):
            if b <= a:
                raise ValueError("breaks must be strictly increasing")

    @staticmethod
    def make(breaks, values) -> "RStepFunction":
        return RStepFunction(tuple(_as_fraction(r) for r in breaks),
                             tuple(int(v) for v in values))

    @staticmethod
    def constant(index: int) -> "RStepFunction":
        return RStepFunction((ZERO, ONE), (int(index),))

    def canonical(self) -> "RStepFunction":
        """Merge adjacent intervals carrying equal values."""
        breaks = [self.breaks[0]]
        values = []
        for i, v in enumerate(self.values):
            if values and values[-1] == v:
                breaks[-1] = self.breaks[i + 1]
            else:
                breaks.append(self.breaks[i + 1])
                values.append(v)
        return RStepFunction(tuple(breaks), tuple(values))

    def value_at(self, r) -> int:
        """Section value at r in [0,1]; r = 1 uses the last interval."""
        r = _as_fraction(r)
        if not ZERO <= r <= ONE:
            raise ValueError("r must lie in [0,1]")
        for i in range(len(self.values)):
            if r < self.breaks[i + 1]:
                return self.values[i]
        return self.values[-1]

    def mass_of_index(self, index: int) -> Fraction:
        """Lebesgue measure of {r : value(r) == index}."""
        return sum((self.breaks[i + 1] - self.breaks[i]
                    for i, v in enumerate(self.values) if v == index), ZERO)

    def le_intervals(self, index: int) -> tuple:
        """{r : value(r) <= index} as a sorted tuple of disjoint [a, b) pairs."""
        out = []
        for i, v in enumerate(self.values):
            if v <= index:
                a, b = self.breaks[i], self.breaks[i + 1]
                if out and out[-1][1] == a:
                    out[-1] = (out[-1][0], b)
                else:
                    out.append((a, b))
        return tuple(out)

    def cdf(self, index: int) -> Fraction:
        """Lebesgue measure of {r : value(r) <= index}."""
        return sum((b - a for a, b in self.le_intervals(index)), ZERO)

    def max_index(self) -> int:
        return max(self.values)


def interval_intersection_measure(xs, ys) -> Fraction:
    """Measure of the intersection of two sorted disjoint interval unions."""
    total = ZERO
    i = j = 0
    while i < len(xs) and j < len(ys):
        a = max(xs[i][0], ys[j][0])
        b = min(xs[i][1], ys[j][1])
        if b > a:
            total += b - a
        if xs[i][1] <= ys[j][1]:
            i += 1
        else:
            j += 1
    return total


def symmetric_difference_measure(xs, ys) -> Fraction:
    """lambda(A symmetric-difference B) for interval unions A, B."""
    mx = sum((b - a for a, b in xs), ZERO)
    my = sum((b - a for a, b in ys), ZERO)
    return mx + my - 2 * interval_intersection_measure(xs, ys)


# ---------------------------------------------------------------------------
# the four kinds

@dataclass(frozen=True)
class PureST:
    stop_index: Mapping

    @staticmethod
    def make(stop_index: Mapping) -> "PureST":
        return PureST({w: int(j) for w, j in stop_index.items()})


@dataclass(frozen=True)
class MixedST:
    sections: Mapping

    def canonical(self) -> "MixedST":
        return MixedST({w: s.canonical() for w, s in self.sections.items()})


@dataclass(frozen=True)
class RandomizedST:
    paths: Mapping

    @staticmethod
    def make(paths: Mapping) -> "RandomizedST":
        return RandomizedST(
            {w: tuple(_as_fraction(x) for x in row) for w, row in paths.items()})


@dataclass(frozen=True)
class DistributionST:
    mass: Mapping

    @staticmethod
    def make(mass: Mapping) -> "DistributionST":
        return DistributionST(
            {w: tuple(_as_fraction(x) for x in row) for w, row in mass.items()})


STOPPING_KINDS = (PureST, MixedST, RandomizedST, DistributionST)


def _shape_violations(space, table, what) -> list:
    out = []
    for w in space.outcomes:
        row = table.get(w)
        if row is None:
            out.append(Violation("RowMissing", f"{what}: no row for {w!r}"))
        elif hasattr(row, "__len__") and len(row) != space.n_times:
            out.append(Violation(
                "RowShapeMismatch", f"{what}: row for {w!r} has length {len(row)}"))
    return out


# ---------------------------------------------------------------------------
# validators

def validate_pure(space: FilteredSpace, sigma: PureST) -> list:
    """Empty iff {sigma <= t_j} is a union of level-j blocks for every j."""
    violations = []
    for w in space.outcomes:
        j = sigma.stop_index.get(w)
        if j is None or not 0 <= j < space.n_times:
            violations.append(Violation(
                "StopIndexOutOfRange", f"stop index for {w!r} is {j}"))
    if violations:
        return violations
    for j in range(space.n_times):
        event = frozenset(w for w in space.outcomes if sigma.stop_index[w] <= j)
        for block in space.partitions[j]:
            inter = block & event
            if inter and inter != block:
                violations.append(Violation(
                    "NotStoppingTime",
                    f"level {j}: {{stop<=t_{j}}} cuts block {sorted(map(str, block))}"))
    return violations


def validate_mixed_sections(space: FilteredSpace, mu: MixedST) -> list:
    """Section-wise check: every r-interval representative is a pure stopping time."""
    violations = _shape_violations(space, mu.sections, "sections")
    if violations:
        return violations
    for w, s in mu.sections.items():
        if s.max_index() >= space.n_times or min(s.values) < 0:
            violations.append(Violation(
                "SectionIndexOutOfRange", f"section of {w!r} leaves the grid"))
    if violations:
        return violations
    cuts = sorted({r for s in mu.sections.values() for r in s.breaks})
    for a, b in zip(cuts, cuts[1:]):
        rep = (a + b) / 2
        sigma = PureST({w: s.value_at(rep) for w, s in mu.sections.items()})
        for v in validate_pure(space, sigma):
            violations.append(Violation(
                "SectionNotStoppingTime", f"r in [{a},{b}): {v.detail}"))
    return violations


def validate_mixed_product(space: FilteredSpace, mu: MixedST) -> list:
    """Product-measurability check: within every level-j block the sets
    {r : section <= t_j} agree up to Lebesgue-null differences."""
    violations = _shape_violations(space, mu.sections, "sections")
    if violations:
        return violations
    for w, s in mu.sections.items():
        if s.max_index() >= space.n_times or min(s.values) < 0:
            violations.append(Violation(
                "SectionIndexOutOfRange", f"section of {w!r} leaves the grid"))
    if violations:
        return violations
    for j in range(space.n_times):
        for block in space.partitions[j]:
            members = sorted(block, key=lambda w: space._order[w])
            ref = mu.sections[members[0]].le_intervals(j)
            for w in members[1:]:
                d = symmetric_difference_measure(ref, mu.sections[w].le_intervals(j))
                if d != 0:
                    violations.append(Violation(
                        "NotJointlyMeasurable",
                        f"level {j}, block {sorted(map(str, block))}: "
                        f"sections differ on measure {d}"))
                    break
    return violations


def validate_mixed(space: FilteredSpace, mu: MixedST) -> list:
    """Run both mixed-stopping-time checks; they agree on every instance
    (the section-wise and product-measurability definitions are equivalent)."""
    by_sections = validate_mixed_sections(space, mu)
    by_product = validate_mixed_product(space, mu)
    if bool(by_sections) != bool(by_product):
        raise AssertionError(
            "mixed validators disagree: "
            f"sections={by_sections!r} product={by_product!r}")
    return by_product if by_product else by_sections


def validate_randomized(space: FilteredSpace, rho: RandomizedST) -> list:
    violations = _shape_violations(space, rho.paths, "paths")
    if violations:
        return violations
    for w in space.outcomes:
        row = rho.paths[w]
        if any(x < 0 or x > 1 for x in row):
            violations.append(Violation(
                "ValueOutOfRange", f"path of {w!r} leaves [0,1]"))
        if any(b < a for a, b in zip(row, row[1:])):
            violations.append(Violation("NotMonotone", f"path of {w!r} decreases"))
        if row[-1] != 1:
            violations.append(Violation(
                "TerminalNotOne", f"path of {w!r} ends at {row[-1]}"))
    for j in range(space.n_times):
        for block in space.partitions[j]:
            vals = {rho.paths[w][j] for w in block}
            if len(vals) > 1:
                violations.append(Violation(
                    "NotAdapted",
                    f"level {j}, block {sorted(map(str, block))}: path values differ"))
    return violations


def validate_distribution(space: FilteredSpace, delta: DistributionST) -> list:
    violations = _shape_violations(space, delta.mass, "mass")
    if violations:
        return violations
    for w in space.outcomes:
        row = delta.mass[w]
        if any(x < 0 for x in row):
            violations.append(Violation("NegativeMass", f"row of {w!r}"))
        if sum(row) != space.prob(w):
            violations.append(Violation(
                "MarginalMismatch",
                f"row of {w!r} sums to {sum(row, ZERO)}, P = {space.prob(w)}"))
    if violations:
        return violations
    for j in range(space.n_times):
        for block in space.partitions[j]:
            dens = {sum(delta.mass[w][: j + 1], ZERO) / space.prob(w) for w in block}
            if len(dens) > 1:
                violations.append(Violation(
                    "DensityNotAdapted",
                    f"level {j}, block {sorted(map(str, block))}: "
                    "cumulative densities differ"))
    return violations


# ---------------------------------------------------------------------------
# embeddings and densities

def embed_pure(sigma: PureST) -> MixedST:
    """The constant-in-r embedding of a pure stopping time."""
    return MixedST({w: RStepFunction.constant(j)
                    for w, j in sigma.stop_index.items()})


def sub_measure(space: FilteredSpace, delta: DistributionST,
                grid_index: int) -> SubMeasure:
    """The measure A |-> delta(A x [0, t_j]) restricted to atoms."""
    if not 0 <= grid_index < space.n_times:
        raise IndexError(f"grid index {grid_index} out of range")
    return SubMeasure({w: sum(delta.mass[w][: grid_index + 1], ZERO)
                       for w in space.outcomes})


def rn_derivative(space: FilteredSpace, delta: DistributionST,
                  grid_index: int) -> dict:
    """Density of delta(. x [0, t_j]) with respect to P, atom by atom."""
    sub = sub_measure(space, delta, grid_index)
    return {w: sub.mass[w] / space.prob(w) for w in space.outcomes}
