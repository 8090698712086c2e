"""Doubling chains of balls and critical lattices, and limit membership.

The level set is the non-negative integers with their usual order (any two
levels have an upper bound, so the order is directed).  The transition from
level m to level n >= m multiplies points by 2^(n - m); identity and
composition laws hold exactly because powers of two scale floats exactly.
The union of the levels exhausts the plane, so every finite point has a
minimal containment level, which is what the limit of the chain reduces to
computationally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .domain import LatticeBasis, Vec, lp_gauge, lp_power_sum
from .lattice import CriticalLatticeKind, critical_lattice
from .solvers import critical_constants


class SystemKind(Enum):
    """What the chain consists of: dilated balls or dilated lattices."""

    BALLS = "balls"      # doubling as a continuous map of the plane
    LATTICES = "lattices"  # doubling as a group homomorphism


@dataclass(frozen=True)
class DirectSystem:
    """A doubling chain at a fixed exponent p."""

    kind: SystemKind
    p: float

    def __post_init__(self) -> None:
        if not self.p >= 1.0:
            raise ValueError(f"p must be >= 1, got {self.p}")

    def map(self, m: int, n: int) -> float:
        """Scale factor of the level-m-to-level-n transition (m <= n)."""
        _require_level(m)
        _require_level(n)
        if m > n:
            raise ValueError(f"transitions run upward only: m={m} > n={n}")
        return 2.0 ** (n - m)


def _require_level(level: int) -> None:
    if int(level) != level or level < 0:
        raise ValueError(f"levels are non-negative integers, got {level}")


def transition(system: DirectSystem, m: int, n: int, point: Vec) -> Vec:
    """Apply the level-m-to-level-n map to a point: scale by 2^(n - m)."""
    factor = system.map(m, n)
    return (factor * point[0], factor * point[1])


def limit_membership(p: float, point: Vec) -> tuple[bool, int]:
    """Smallest level m with point in 2^m * D_p; the member flag is always
    True for finite points since the union of levels is the whole plane.

    The first guess is ceil(log2(gauge)); it is then nudged so that level m
    contains the point and level m - 1 (when m >= 1) does not, which makes
    the result exact regardless of rounding in the logarithm.
    """
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if not (math.isfinite(point[0]) and math.isfinite(point[1])):
        raise ValueError(f"point must be finite, got {point}")
    gauge = lp_gauge(p, point)
    if gauge == 0.0:
        return True, 0
    level = max(0, math.ceil(math.log2(gauge)))
    while level > 0 and lp_power_sum(p, point, 2.0 ** (level - 1)) <= 1.0:
        level -= 1
    while lp_power_sum(p, point, 2.0 ** level) > 1.0:
        level += 1
    return True, level


def lattice_chain(
    p: float, kind: CriticalLatticeKind, depth: int
) -> list[LatticeBasis]:
    """Levels 0..depth of the doubling chain of critical lattices.

    Entry m equals the level-m critical lattice; each entry is the doubling
    of the previous one, hence a sublattice of it with determinant ratio 4.
    """
    if int(depth) != depth or depth < 1:
        raise ValueError(f"depth must be a positive integer, got {depth}")
    constants = critical_constants(p)
    return [critical_lattice(p, kind, m, constants) for m in range(depth + 1)]


def subgroup_index(sub: LatticeBasis, sup: LatticeBasis) -> float:
    """Index of a sublattice in a superlattice, as the determinant ratio.

    Doubling steps of planar lattices are sometimes described as index-two
    moves, but the rank-2 subgroup index of 2L in L is the determinant
    ratio 4, and the ratio is what this reports.
    """
    return sub.det / sup.det
