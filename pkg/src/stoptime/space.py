"""Finite filtered probability spaces with exact rational data.

The filtration is stored as one partition of the outcome set per grid
time; measurability of a random variable at time t_j means constancy on
the blocks of partitions[j].  All probabilities, times, and process
values are `fractions.Fraction`, so every check in this package is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Outcome = Hashable
Block = frozenset


@dataclass(frozen=True)
class Violation:
    """One violated invariant, with a machine-readable code."""

    code: str
    detail: str

    def __str__(self):
        return f"{self.code}: {self.detail}"


class SpaceError(ValueError):
    """Raised when raw inputs do not form a valid filtered space."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class IndexOutOfRange(IndexError):
    pass


class IncompatibleSpaces(ValueError):
    """Two objects do not live on the same filtered space."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _canonical_partition(blocks, order: dict) -> tuple:
    """Sort blocks by their earliest outcome so equal partitions compare equal."""
    return tuple(sorted((frozenset(b) for b in blocks),
                        key=lambda b: min(order[w] for w in b)))


@dataclass(frozen=True)
class FilteredSpace:
    """Outcomes with exact atom probabilities, a time grid, and a
    refining chain of partitions (one per grid time)."""

    outcomes: tuple
    probs: tuple
    grid: tuple
    partitions: tuple

    # index of each outcome, for canonical ordering and fast lookups
    _order: dict = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self._order is None:
            object.__setattr__(
                self, "_order", {w: i for i, w in enumerate(self.outcomes)})

    @property
    def n_times(self) -> int:
        return len(self.grid)

    @property
    def last_index(self) -> int:
        return len(self.grid) - 1

    @property
    def horizon(self) -> Fraction:
        return self.grid[-1]

    def prob(self, outcome) -> Fraction:
        return self.probs[self._order[outcome]]

    def atom_of(self, grid_index: int, outcome) -> Block:
        """The block of partitions[grid_index] containing the outcome."""
        if not 0 <= grid_index < len(self.grid):
            raise IndexOutOfRange(f"grid index {grid_index} out of range")
        if outcome not in self._order:
            raise IndexOutOfRange(f"unknown outcome {outcome!r}")
        for block in self.partitions[grid_index]:
            if outcome in block:
                return block
        raise AssertionError("partition invariant broken")

    def blocks(self, grid_index: int) -> tuple:
        if not 0 <= grid_index < len(self.grid):
            raise IndexOutOfRange(f"grid index {grid_index} out of range")
        return self.partitions[grid_index]

    def is_event(self, grid_index: int, event: frozenset) -> bool:
        """True iff the outcome set is a union of blocks of partitions[grid_index]."""
        for block in self.partitions[grid_index]:
            inter = block & event
            if inter and inter != block:
                return False
        return True


def check_space(outcomes, probs, grid, partitions) -> list:
    """Collect every violated invariant of the raw space inputs."""
    violations = []
    outcomes = tuple(outcomes)
    if len(outcomes) == 0:
        violations.append(Violation("EmptyOutcomes", "need at least one outcome"))
        return violations
    if len(set(outcomes)) != len(outcomes):
        violations.append(Violation("DuplicateOutcome", "outcome labels must be distinct"))
        return violations
    universe = frozenset(outcomes)

    probs = tuple(_as_fraction(p) for p in probs)
    if len(probs) != len(outcomes):
        violations.append(Violation(
            "ProbShapeMismatch", f"{len(probs)} probs for {len(outcomes)} outcomes"))
    else:
        for w, p in zip(outcomes, probs):
            if p <= 0:
                violations.append(Violation("NonPositiveProb", f"P({w!r}) = {p}"))
        if sum(probs) != 1:
            violations.append(Violation(
                "ProbsNotSummingToOne", f"sum is {sum(probs)}"))

    grid = tuple(_as_fraction(t) for t in grid)
    if len(grid) == 0:
        violations.append(Violation("EmptyGrid", "need at least one grid time"))
    else:
        if grid[0] != 0:
            violations.append(Violation("GridNotIncreasing", f"t_0 = {grid[0]} != 0"))
        for j in range(1, len(grid)):
            if grid[j] <= grid[j - 1]:
                violations.append(Violation(
                    "GridNotIncreasing", f"t_{j} = {grid[j]} <= t_{j-1} = {grid[j-1]}"))

    partitions = tuple(tuple(frozenset(b) for b in part) for part in partitions)
    if len(partitions) != len(grid):
        violations.append(Violation(
            "PartitionShapeMismatch",
            f"{len(partitions)} partitions for {len(grid)} grid times"))
        return violations
    for j, part in enumerate(partitions):
        seen = set()
        for block in part:
            if not block or not block <= universe or block & seen:
                violations.append(Violation(
                    "NotAPartition", f"level {j}: bad block {set(block)}"))
                break
            seen |= block
        else:
            if seen != universe:
                violations.append(Violation(
                    "NotAPartition", f"level {j}: blocks do not cover all outcomes"))
    if not any(v.code == "NotAPartition" for v in violations):
        for j in range(1, len(partitions)):
            coarse = partitions[j - 1]
            for block in partitions[j]:
                if not any(block <= cb for cb in coarse):
                    violations.append(Violation(
                        "RefinementViolated",
                        f"block {set(block)} at level {j} not inside a level-{j-1} block"))
    return violations


def build_space(outcomes, probs, grid, partitions) -> FilteredSpace:
    """Validate the inputs and return a canonical FilteredSpace.

    Raises SpaceError carrying the full list of violations otherwise.
    """
    violations = check_space(outcomes, probs, grid, partitions)
    if violations:
        raise SpaceError(violations)
    outcomes = tuple(outcomes)
    order = {w: i for i, w in enumerate(outcomes)}
    return FilteredSpace(
        outcomes=outcomes,
        probs=tuple(_as_fraction(p) for p in probs),
        grid=tuple(_as_fraction(t) for t in grid),
        partitions=tuple(_canonical_partition(part, order) for part in partitions),
    )


def atom_of(space: FilteredSpace, grid_index: int, outcome) -> Block:
    return space.atom_of(grid_index, outcome)


@dataclass(frozen=True)
class AdaptedProcess:
    """A table of exact values over outcomes x grid.

    Adaptedness (block constancy per level) is a property of the table
    relative to a space; it is checked by validate_adapted, not assumed.
    """

    values: Mapping

    def at(self, outcome, grid_index: int) -> Fraction:
        return self.values[outcome][grid_index]

    @staticmethod
    def from_table(table: Mapping) -> "AdaptedProcess":
        return AdaptedProcess(
            {w: tuple(_as_fraction(x) for x in row) for w, row in table.items()})

    @staticmethod
    def constant(space: FilteredSpace, c) -> "AdaptedProcess":
        c = _as_fraction(c)
        return AdaptedProcess(
            {w: tuple(c for _ in space.grid) for w in space.outcomes})

    @staticmethod
    def time_process(space: FilteredSpace) -> "AdaptedProcess":
        """The deterministic process whose value at t_j is t_j."""
        return AdaptedProcess({w: tuple(space.grid) for w in space.outcomes})

    def min_value(self) -> Fraction:
        return min(min(row) for row in self.values.values())

    def max_value(self) -> Fraction:
        return max(max(row) for row in self.values.values())


def validate_adapted(space: FilteredSpace, process: AdaptedProcess) -> list:
    """Report every (level, block) on which the process is not constant."""
    violations = []
    for w in space.outcomes:
        row = process.values.get(w)
        if row is None or len(row) != space.n_times:
            violations.append(Violation(
                "ProcessShapeMismatch", f"row for {w!r} missing or wrong length"))
            return violations
    for j in range(space.n_times):
        for block in space.partitions[j]:
            vals = {process.values[w][j] for w in block}
            if len(vals) > 1:
                violations.append(Violation(
                    "NotConstantOnBlock",
                    f"level {j}, block {sorted(map(str, block))}: values differ"))
    return violations


@dataclass(frozen=True)
class SubMeasure:
    """A nonnegative mass per atom, dominated by P."""

    mass: Mapping

    def total(self) -> Fraction:
        return sum(self.mass.values(), Fraction(0))


def check_submeasure(space: FilteredSpace, sub: SubMeasure) -> list:
    violations = []
    for w in space.outcomes:
        m = sub.mass.get(w)
        if m is None:
            violations.append(Violation("MassMissing", f"no mass for {w!r}"))
        elif m < 0 or m > space.prob(w):
            violations.append(Violation(
                "MassOutOfRange", f"mass({w!r}) = {m} not in [0, {space.prob(w)}]"))
    return violations
