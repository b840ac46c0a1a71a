"""Discrete free-field dynamics on a periodic lattice.

phi_n(t + tau) = phi_{n+1}(t) + phi_{n-1}(t) - phi_n(t - tau), iterated in
exact rationals. The light-cone variables a_n(t) = phi_n(t-tau) - phi_{n-1}(t)
and b_n(t) = phi_n(t-tau) - phi_{n+1}(t) are transported rigidly to the
right and to the left.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .report import RelationReport

__all__ = [
    "ClassicalField",
    "Trajectory",
    "constant_field",
    "pulse_field",
    "random_field",
    "classical_evolve",
    "right_movers",
    "left_movers",
    "check_chiral_transport",
    "check_sublattice_independence",
]

SUITE = "dynamics"


@dataclass(frozen=True)
class ClassicalField:
    """Two consecutive time slices phi(t - tau), phi(t) on `sites` sites."""

    prev: tuple
    curr: tuple
    a: Fraction = Fraction(1)
    tau: Fraction = Fraction(1)

    def __post_init__(self):
        if len(self.prev) != len(self.curr):
            raise ValueError("time slices must have the same length")
        if len(self.curr) < 3:
            raise ValueError("the lattice needs at least 3 sites")

    @property
    def sites(self) -> int:
        return len(self.curr)


def _fr(xs: Sequence, exact: bool) -> tuple:
    return tuple(Fraction(x) if exact else float(x) for x in xs)


def constant_field(sites: int, value=1, exact: bool = True) -> ClassicalField:
    return ClassicalField(_fr([value] * sites, exact), _fr([value] * sites, exact))


def pulse_field(sites: int, site: int = 0, exact: bool = True) -> ClassicalField:
    curr = [0] * sites
    curr[site % sites] = 1
    return ClassicalField(_fr([0] * sites, exact), _fr(curr, exact))


def random_field(sites: int, seed: int, exact: bool = True) -> ClassicalField:
    rng = random.Random(seed)
    draw = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return ClassicalField(_fr([draw() for _ in range(sites)], exact), _fr([draw() for _ in range(sites)], exact))


@dataclass
class Trajectory:
    """slices[k] is phi at time (k - 1) tau; slices[0], slices[1] are the initial data."""

    slices: list = field(default_factory=list)

    @property
    def sites(self) -> int:
        return len(self.slices[0])

    def value(self, n: int, k: int):
        return self.slices[k][n % self.sites]


def classical_evolve(f: ClassicalField, steps: int) -> Trajectory:
    if steps < 1:
        raise ValueError("steps must be positive")
    S = f.sites
    slices = [tuple(f.prev), tuple(f.curr)]
    for _ in range(steps):
        back, now = slices[-2], slices[-1]
        slices.append(tuple(now[(n + 1) % S] + now[(n - 1) % S] - back[n] for n in range(S)))
    return Trajectory(slices)


def right_movers(tr: Trajectory, k: int) -> list:
    """a_n at slice k (k >= 1): phi_n(t - tau) - phi_{n-1}(t)."""
    return [tr.value(n, k - 1) - tr.value(n - 1, k) for n in range(tr.sites)]


def left_movers(tr: Trajectory, k: int) -> list:
    return [tr.value(n, k - 1) - tr.value(n + 1, k) for n in range(tr.sites)]


def check_chiral_transport(tr: Trajectory) -> list:
    """Right/left transport, conserved light-cone sums and constant preservation."""
    S = tr.sites
    right = RelationReport(SUITE, "ff-right", "a_n(t+tau) = a_{n-1}(t)", 0)
    left = RelationReport(SUITE, "ff-left", "b_n(t+tau) = b_{n+1}(t)", 0)
    sums = RelationReport(SUITE, "ff-charges", "sum_n a_n and sum_n b_n are constant", 0)
    a0, b0 = sum(right_movers(tr, 1)), sum(left_movers(tr, 1))
    for k in range(1, len(tr.slices) - 1):
        a, a1 = right_movers(tr, k), right_movers(tr, k + 1)
        b, b1 = left_movers(tr, k), left_movers(tr, k + 1)
        for n in range(S):
            right.instances_checked += 1
            if a1[n] != a[(n - 1) % S]:
                right.add_failure({"slice": k, "site": n}, f"{a1[n]} != {a[(n - 1) % S]}")
            left.instances_checked += 1
            if b1[n] != b[(n + 1) % S]:
                left.add_failure({"slice": k, "site": n}, f"{b1[n]} != {b[(n + 1) % S]}")
        sums.instances_checked += 1
        if sum(a1) != a0 or sum(b1) != b0:
            sums.add_failure({"slice": k + 1}, "light-cone sum changed")
    reports = [right, left, sums]
    first = tr.slices[0]
    if len(set(first)) == 1 and tr.slices[1] == first:
        const = RelationReport(SUITE, "ff-constant", "constant data stay constant", 0)
        for k, sl in enumerate(tr.slices):
            const.instances_checked += 1
            if sl != first:
                const.add_failure({"slice": k}, "slice differs from the initial constant")
        reports.append(const)
    return reports


def _mask(f: ClassicalField, parity: int) -> ClassicalField:
    """Keep only the points with n + k = parity mod 2 (k = 0 for prev, 1 for curr)."""
    zero = f.curr[0] * 0
    prev = tuple(x if (n % 2) == parity else zero for n, x in enumerate(f.prev))
    curr = tuple(x if (n + 1) % 2 == parity else zero for n, x in enumerate(f.curr))
    return ClassicalField(prev, curr, f.a, f.tau)


def check_sublattice_independence(f: ClassicalField, steps: int) -> RelationReport:
    """Each light-cone sublattice evolves on its own and the two runs superpose."""
    if f.sites % 2:
        raise ValueError("light-cone sublattices need an even number of sites")
    rep = RelationReport(SUITE, "ff-sublattice", "even/odd light-cone sublattices evolve independently", 0)
    full = classical_evolve(f, steps)
    runs = [classical_evolve(_mask(f, par), steps) for par in (0, 1)]
    for k, sl in enumerate(full.slices):
        for n, x in enumerate(sl):
            par = (n + k) % 2
            own, other = runs[par].slices[k][n], runs[1 - par].slices[k][n]
            rep.instances_checked += 1
            if own != x or other != 0:
                rep.add_failure({"slice": k, "site": n}, f"full={x} own={own} other={other}")
    return rep
