"""Additive probability on finite sets and its Dempster-Shafer relaxation.

Subsets of the sample space are bitmasks, so all set logic is exact.  The
Moebius quantities computed here vanish identically for additive measures;
that is the classical baseline against which the nonzero operator analogues
on subspaces are contrasted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPartition
from .rng import Xorshift64Star

MAX_OMEGA = 16


@dataclass(frozen=True)
class FiniteMeasure:
    """Additive probability measure given by point masses on {0..n-1}."""

    point_masses: tuple[float, ...]

    def __post_init__(self):
        n = len(self.point_masses)
        if not (1 <= n <= MAX_OMEGA):
            raise ValueError(f"sample space size {n} out of range 1..{MAX_OMEGA}")
        if any(m < 0 for m in self.point_masses):
            raise ValueError("negative point mass")
        if abs(sum(self.point_masses) - 1.0) > 1e-12:
            raise ValueError(f"masses sum to {sum(self.point_masses)}, not 1")

    @property
    def omega_size(self) -> int:
        return len(self.point_masses)

    @property
    def full_mask(self) -> int:
        return (1 << self.omega_size) - 1

    def p(self, subset: int) -> float:
        """Probability of a subset given as a bitmask."""
        if subset < 0 or subset > self.full_mask:
            raise ValueError(f"bitmask {subset} out of range")
        total = 0.0
        for i in range(self.omega_size):
            if subset & (1 << i):
                total += self.point_masses[i]
        return total


def random_measure(n: int, rng: Xorshift64Star) -> FiniteMeasure:
    raw = [rng.uniform() + 1e-9 for _ in range(n)]
    s = sum(raw)
    masses = [x / s for x in raw]
    masses[-1] = 1.0 - sum(masses[:-1])  # exact unit total
    return FiniteMeasure(tuple(masses))


def mobius_delta(measure: FiniteMeasure, sets: list[int]) -> tuple[float, float]:
    """The Moebius quantity and its dual for a list of subsets.

    delta sums (-1)^(n-|E|) p(union over E) over nonempty E, plus
    (-1)^n p(intersection of all); the dual swaps union and intersection.
    Both vanish for every additive measure; for n = 1 they are zero by
    construction (the transform reduces to p itself).
    """
    n = len(sets)
    if not (1 <= n <= 12):
        raise ValueError(f"number of sets {n} out of range 1..12")
    for A in sets:
        if A < 0 or A > measure.full_mask:
            raise ValueError(f"bitmask {A} out of range")
    delta = 0.0
    delta_dual = 0.0
    for mask in range(1, 1 << n):
        union = 0
        inter = measure.full_mask
        for i in range(n):
            if mask & (1 << i):
                union |= sets[i]
                inter &= sets[i]
        sign = (-1) ** (n - mask.bit_count())
        delta += sign * measure.p(union)
        delta_dual += sign * measure.p(inter)
    inter_all = measure.full_mask
    union_all = 0
    for A in sets:
        inter_all &= A
        union_all |= A
    delta += (-1) ** n * measure.p(inter_all)
    delta_dual += (-1) ** n * measure.p(union_all)
    return delta, delta_dual


def total_probability_residual(measure: FiniteMeasure, A: int,
                               partition: list[int]) -> float:
    """p(A) - sum_i p(A and B_i) over a partition of the sample space.

    Zero for additive measures; raises InvalidPartition when the blocks
    overlap or fail to cover.
    """
    if A < 0 or A > measure.full_mask:
        raise ValueError(f"bitmask {A} out of range")
    seen = 0
    for B in partition:
        if B < 0 or B > measure.full_mask:
            raise ValueError(f"bitmask {B} out of range")
        if seen & B:
            raise InvalidPartition("blocks overlap")
        seen |= B
    if seen != measure.full_mask:
        raise InvalidPartition("blocks do not cover the sample space")
    return measure.p(A) - sum(measure.p(A & B) for B in partition)


@dataclass(frozen=True)
class MassFunction:
    """Dempster-Shafer basic mass assignment on subsets of {0..n-1}."""

    omega_size: int
    masses: tuple[tuple[int, float], ...]  # (bitmask, mass) of focal elements

    def __post_init__(self):
        if not (1 <= self.omega_size <= MAX_OMEGA):
            raise ValueError(f"sample space size {self.omega_size} out of range")
        full = (1 << self.omega_size) - 1
        total = 0.0
        seen = set()
        for subset, m in self.masses:
            if subset == 0:
                raise ValueError("mass assigned to the empty set")
            if subset < 0 or subset > full:
                raise ValueError(f"bitmask {subset} out of range")
            if subset in seen:
                raise ValueError(f"duplicate focal element {subset}")
            if m < 0:
                raise ValueError("negative mass")
            seen.add(subset)
            total += m
        if not self.masses:
            raise ValueError("at least one focal element required")
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"masses sum to {total}, not 1")

    @property
    def full_mask(self) -> int:
        return (1 << self.omega_size) - 1

    def belief(self, A: int) -> float:
        """Lower probability: total mass of focal elements inside A."""
        return sum(m for subset, m in self.masses if subset & ~A == 0)

    def plausibility(self, A: int) -> float:
        """Upper probability: 1 minus the belief of the complement."""
        return 1.0 - self.belief(self.full_mask & ~A)


def belief_plausibility(mf: MassFunction, A: int) -> tuple[float, float]:
    """(belief, plausibility) of a subset; belief never exceeds plausibility."""
    if A < 0 or A > mf.full_mask:
        raise ValueError(f"bitmask {A} out of range")
    return mf.belief(A), mf.plausibility(A)


def random_mass_function(n: int, rng: Xorshift64Star,
                         focal_count: int | None = None) -> MassFunction:
    full = (1 << n) - 1
    k = focal_count or (1 + rng.integer(0, min(6, full)))
    chosen: dict[int, float] = {}
    while len(chosen) < k:
        subset = 1 + rng.integer(0, full)
        chosen.setdefault(subset, rng.uniform() + 1e-9)
    total = sum(chosen.values())
    items = sorted(chosen.items())
    masses = [(s, m / total) for s, m in items]
    # pin the last mass so the total is exactly 1
    last_subset, _ = masses[-1]
    masses[-1] = (last_subset, 1.0 - sum(m for _, m in masses[:-1]))
    return MassFunction(n, tuple(masses))
