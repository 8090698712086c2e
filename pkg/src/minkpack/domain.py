"""Shared value types for planar L^p ball and lattice computations.

The central object is the ball D_p = {(x, y) : |x|^p + |y|^p <= 1} for an
exponent p >= 1, together with its dyadic dilates 2^m * D_p.  Exponents fall
into three regimes named after the classical authors of the corresponding
critical-determinant results: Minkowski (1 <= p < 2), Davis (2 <= p < p0)
and Chebyshev-Cohn (p >= p0), where p0 ~ 2.5725 is the Davis constant
computed in :mod:`minkpack.solvers`.

All types here are immutable values and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Vec = tuple[float, float]


class DomainClass(Enum):
    """Exponent regime of a ball or dilated domain."""

    MINKOWSKI = "minkowski"          # 1 <= p < 2
    DAVIS = "davis"                  # 2 <= p < p0
    CHEBYSHEV_COHN = "chebyshev-cohn"  # p >= p0


class Branch(Enum):
    """Which edge of the moduli strip realizes the critical determinant."""

    DELTA0 = "delta0"  # value at the sigma = sigma_p edge
    DELTA1 = "delta1"  # value at the sigma = 1 edge


def lp_power_sum(p: float, point: Vec, scale: float = 1.0) -> float:
    """|x/scale|^p + |y/scale|^p; equals 1 exactly on the boundary of scale*D_p."""
    x, y = point
    return abs(x / scale) ** p + abs(y / scale) ** p


def lp_gauge(p: float, point: Vec) -> float:
    """Gauge of a point: the t >= 0 such that point/t lies on the D_p boundary."""
    x, y = point
    s = max(abs(x), abs(y))
    if s == 0.0:
        return 0.0
    # factor out the sup norm so large p cannot overflow
    return s * (abs(x / s) ** p + abs(y / s) ** p) ** (1.0 / p)


@dataclass(frozen=True)
class BallSpec:
    """The domain 2^m * D_p: exponent p >= 1 and dilation level m >= 0."""

    p: float
    m: int = 0

    def __post_init__(self) -> None:
        if not self.p >= 1.0:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"m must be a non-negative integer, got {self.m}")

    @property
    def scale(self) -> float:
        return 2.0 ** self.m

    def power_sum(self, point: Vec) -> float:
        return lp_power_sum(self.p, point, self.scale)

    def contains(self, point: Vec, tol: float = 0.0) -> bool:
        return self.power_sum(point) <= 1.0 + tol


def classify(p: float, davis_constant: float) -> DomainClass:
    """Assign an exponent to its regime.

    Half-open conventions: p = 2 counts as Davis and p = davis_constant as
    Chebyshev-Cohn.  Both critical-determinant branches agree at these two
    boundary exponents, so the convention only fixes reporting, never values.
    """
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if not 2.57 < davis_constant < 2.58:
        raise ValueError(
            f"davis_constant must lie in (2.57, 2.58), got {davis_constant}"
        )
    if p < 2.0:
        return DomainClass.MINKOWSKI
    if p < davis_constant:
        return DomainClass.DAVIS
    return DomainClass.CHEBYSHEV_COHN


@dataclass(frozen=True)
class LatticeBasis:
    """Two planar vectors spanning a non-degenerate lattice.

    The determinant is always recomputed from the vectors, so it can never
    go stale or disagree with them.
    """

    a: Vec
    b: Vec

    def __post_init__(self) -> None:
        d = self.det
        if not d > 0.0:
            raise ValueError(f"degenerate basis: |det| = {d}")

    @property
    def det(self) -> float:
        return abs(self.a[0] * self.b[1] - self.a[1] * self.b[0])

    def point(self, u: int, v: int) -> Vec:
        """The lattice point u*a + v*b."""
        return (
            u * self.a[0] + v * self.b[0],
            u * self.a[1] + v * self.b[1],
        )

    def scaled(self, factor: float) -> "LatticeBasis":
        return LatticeBasis(
            (factor * self.a[0], factor * self.a[1]),
            (factor * self.b[0], factor * self.b[1]),
        )


@dataclass(frozen=True)
class ModuliPoint:
    """A point of the moduli strip of three-contact admissible lattices.

    sigma in [1, sigma_p] is the free coordinate, tau in [0, tau_p] is pinned
    by the third-contact condition, and delta is the lattice determinant
    (tau + sigma)(1 + tau^p)^(-1/p)(1 + sigma^p)^(-1/p).
    """

    p: float
    sigma: float
    tau: float
    delta: float


@dataclass(frozen=True)
class PackingReport:
    """Result record for the optimal lattice packing of one domain 2^m * D_p."""

    spec: BallSpec
    branch: Branch
    critical_determinant: float
    density: float
    verified_admissible: bool
    boundary_pairs: int


def shoelace_area(vertices: list[Vec] | tuple[Vec, ...]) -> float:
    """Polygon area by the shoelace formula (vertex order assumed simple)."""
    acc = 0.0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        acc += x1 * y2 - x2 * y1
    return abs(acc) / 2.0
