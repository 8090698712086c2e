"""Ball areas, optimal packing densities, and extremal hexagons.

The optimal lattice packing of 2^m * D_p places translates on the critical
lattice of the doubled domain 2^(m+1) * D_p; its determinant is four times
the critical determinant of the domain itself, so the density is

    area(2^m D_p) / (4 * Delta(2^m D_p)),

independent of m.  The six points where a translate touches its neighbours
are the contact points +-a, +-b, +-(a + b) of the level-m critical lattice;
they are simultaneously the vertices of the minimal inscribed hexagon
(area 3 * Delta) and the tangency points of the minimal circumscribed
hexagon (area 4 * Delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import (
    BallSpec,
    Branch,
    PackingReport,
    Vec,
    lp_power_sum,
    shoelace_area,
)
from .lattice import CriticalLatticeKind, admissibility_check, critical_lattice, enumerate_points
from .solvers import critical_constants, critical_determinant

DEFAULT_QUAD_TOL = 1e-12


class QuadratureError(RuntimeError):
    """Adaptive quadrature could not reach the requested error bound."""


@dataclass(frozen=True)
class HexagonPair:
    """The two extremal hexagons of one domain.

    Both are centrally symmetric (vertex i antipodal to vertex i + 3) and
    the inscribed area is always strictly below the circumscribed one
    (their ratio is 3/4).
    """

    inscribed_vertices: tuple[Vec, ...]
    circumscribed_vertices: tuple[Vec, ...]
    inscribed_area: float
    circumscribed_area: float


def kind_for_branch(branch: Branch) -> CriticalLatticeKind:
    """The critical-lattice kind realizing a given determinant branch."""
    if branch is Branch.DELTA1:
        return CriticalLatticeKind.LAMBDA1
    return CriticalLatticeKind.LAMBDA0


def _adaptive_simpson(f, a: float, b: float, tol: float, max_depth: int = 18) -> float:
    """Adaptive Simpson integral of f over [a, b] with absolute error < tol.

    Interval error estimates are accumulated; if splitting bottoms out
    before the total estimate is below tol, QuadratureError reports the
    bound actually achieved.  The depth cap bounds the work even for
    tolerances below what double precision can deliver; the smooth
    integrands used here converge at a small fraction of it.
    """
    leftover = [0.0]  # total unresolved error estimate

    def recurse(x0, x2, f0, f1, f2, whole, tol_here, depth):
        x1 = 0.5 * (x0 + x2)
        xl, xr = 0.5 * (x0 + x1), 0.5 * (x1 + x2)
        fl, fr = f(xl), f(xr)
        left = (x1 - x0) / 6.0 * (f0 + 4.0 * fl + f1)
        right = (x2 - x1) / 6.0 * (f1 + 4.0 * fr + f2)
        err = (left + right - whole) / 15.0
        if abs(err) <= tol_here or depth >= max_depth:
            if depth >= max_depth and abs(err) > tol_here:
                leftover[0] += abs(err)
            return left + right + err
        return recurse(x0, x1, f0, fl, f1, left, tol_here / 2.0, depth + 1) + recurse(
            x1, x2, f1, fr, f2, right, tol_here / 2.0, depth + 1
        )

    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    value = recurse(a, b, fa, fm, fb, whole, tol, 0)
    if leftover[0] > tol:
        raise QuadratureError(
            f"requested abs error {tol:.3e}, achieved only {leftover[0]:.3e}"
        )
    return value


def ball_area(p: float, m: int = 0, quad_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Area of 2^m * D_p, i.e. 4^m * 4 * integral_0^1 (1 - x^p)^(1/p) dx.

    The quarter-ball integral is rewritten using the (x, y) -> (y, x)
    symmetry of the region: with c = 2^(-1/p) (the point where the boundary
    crosses the diagonal) it equals 2 * integral_0^c - c^2.  On [0, c] the
    integrand is smooth, so adaptive Simpson needs no special treatment of
    the vertical tangent at x = 1.
    """
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if int(m) != m or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m}")
    if not quad_tol > 0.0:
        raise ValueError(f"quad_tol must be positive, got {quad_tol}")
    c = 2.0 ** (-1.0 / p)
    integral = _adaptive_simpson(lambda x: (1.0 - x ** p) ** (1.0 / p), 0.0, c, quad_tol)
    return 4.0 ** m * 4.0 * (2.0 * integral - c * c)


def packing_density(p: float, m: int = 0) -> PackingReport:
    """Optimal lattice-packing density of 2^m * D_p, with verification.

    The packing lattice is the critical lattice (branch-selected kind) of
    the doubled domain 2^(m+1) * D_p; the report carries its admissibility
    check and boundary-pair count for that domain.
    """
    spec = BallSpec(p, m)
    constants = critical_constants(p)
    delta_m, branch = critical_determinant(spec, constants)
    area = ball_area(p, m)
    packing_lattice = critical_lattice(p, kind_for_branch(branch), m + 1, constants)
    admissible, pairs = admissibility_check(packing_lattice, BallSpec(p, m + 1))
    return PackingReport(
        spec=spec,
        branch=branch,
        critical_determinant=delta_m,
        density=area / (4.0 * delta_m),
        verified_admissible=admissible,
        boundary_pairs=pairs,
    )


def boundary_points(p: float, scale: float = 1.0, n: int = 256) -> list[Vec]:
    """n points on the boundary of scale * D_p, counterclockwise from (scale, 0).

    Uses the superellipse parametrization x = sgn(cos t)|cos t|^(2/p),
    y = sgn(sin t)|sin t|^(2/p), which satisfies |x|^p + |y|^p = 1 exactly.
    """
    pts = []
    e = 2.0 / p
    for k in range(n):
        t = 2.0 * math.pi * k / n
        c, s = math.cos(t), math.sin(t)
        x = math.copysign(abs(c) ** e, c) * scale
        y = math.copysign(abs(s) ** e, s) * scale
        pts.append((x, y))
    return pts


def verify_nonoverlap(
    p: float, m: int = 0, samples: int = 1000, lattice_scale: float = 1.0
) -> bool:
    """True when translates of 2^m * D_p by its packing lattice stay disjoint.

    Two routes must both pass.  By central symmetry the translate at lambda
    meets the interior of the central ball iff lambda lies interior to the
    doubled domain, so the first route is a membership test on every nearby
    lattice point.  The second samples the boundary of each nearby translate
    densely and checks no sampled point falls inside the central ball.
    ``lattice_scale`` shrinks the packing lattice so tests can exercise the
    failure mode.
    """
    if samples < 10:
        raise ValueError(f"need at least 10 boundary samples, got {samples}")
    spec = BallSpec(p, m)
    constants = critical_constants(p)
    _, branch = critical_determinant(spec, constants)
    lattice = critical_lattice(p, kind_for_branch(branch), m + 1, constants)
    if lattice_scale != 1.0:
        lattice = lattice.scaled(lattice_scale)

    tol = 1e-9
    doubled = BallSpec(p, m + 1)
    # translates further than twice the ball's sup extent cannot meet it
    nearby = enumerate_points(lattice, radius=2.0 * spec.scale * (1.0 + 1e-6))
    for z in nearby:
        if doubled.power_sum(z) < 1.0 - tol:
            return False

    rim = np.array(boundary_points(p, spec.scale, samples))
    for zx, zy in nearby:
        shifted = rim + (zx, zy)
        sums = lp_power_sum(p, (shifted[:, 0], shifted[:, 1]), spec.scale)
        if np.any(sums < 1.0 - tol):
            return False
    return True


def _critical_basis(p: float, m: int):
    constants = critical_constants(p)
    delta_m, branch = critical_determinant(BallSpec(p, m), constants)
    basis = critical_lattice(p, kind_for_branch(branch), m, constants)
    return basis, delta_m


def _hexagon_vertices(basis) -> list[Vec]:
    a, b = basis.a, basis.b
    ab = (a[0] + b[0], a[1] + b[1])
    return [a, ab, b, (-a[0], -a[1]), (-ab[0], -ab[1]), (-b[0], -b[1])]


def inscribed_hexagon(p: float, m: int = 0) -> tuple[list[Vec], float]:
    """Minimal inscribed hexagon: vertices +-a, +-(a+b), +-b, CCW, and area.

    The hexagon splits into six triangles of area det/2 each, so the
    shoelace area equals three times the critical determinant.
    """
    basis, _ = _critical_basis(p, m)
    verts = _hexagon_vertices(basis)
    return verts, shoelace_area(verts)


def _boundary_gradient(p: float, scale: float, point: Vec) -> Vec:
    """Outward gradient of |x/s|^p + |y/s|^p at a boundary point.

    Components with a zero coordinate vanish for p > 1, which yields the
    axis-aligned tangent there by continuity.
    """
    x, y = point
    gx = 0.0 if x == 0.0 else p * abs(x / scale) ** (p - 1.0) * math.copysign(1.0, x) / scale
    gy = 0.0 if y == 0.0 else p * abs(y / scale) ** (p - 1.0) * math.copysign(1.0, y) / scale
    return (gx, gy)


def circumscribed_hexagon(p: float, m: int = 0) -> tuple[list[Vec], float]:
    """Minimal circumscribed hexagon via tangent lines at the contact points.

    The six tangents to 2^m * D_p at +-a, +-(a+b), +-b are intersected
    pairwise (consecutive in CCW order) to get the vertices; the area comes
    out as 4 times the critical determinant, which is asserted by the tests.

    Refuses p = 1: the diamond's boundary is polygonal and three of the
    contact points are corners with no unique tangent direction.  The
    formula value 4 * Delta still applies there; only the construction is
    undefined.
    """
    if p == 1.0:
        raise ValueError(
            "p = 1: contact points are corners of the diamond, tangent "
            "directions are not unique (the area formula value is 4 * Delta)"
        )
    basis, _ = _critical_basis(p, m)
    scale = 2.0 ** m
    contacts = _hexagon_vertices(basis)
    grads = [_boundary_gradient(p, scale, c) for c in contacts]
    verts: list[Vec] = []
    for i in range(6):
        g1, c1 = grads[i], contacts[i]
        g2, c2 = grads[(i + 1) % 6], contacts[(i + 1) % 6]
        det = g1[0] * g2[1] - g1[1] * g2[0]
        if abs(det) < 1e-14:
            raise ValueError(
                f"consecutive tangent lines at contacts {i} and {i + 1} are parallel"
            )
        r1 = g1[0] * c1[0] + g1[1] * c1[1]
        r2 = g2[0] * c2[0] + g2[1] * c2[1]
        verts.append(((r1 * g2[1] - r2 * g1[1]) / det, (g1[0] * r2 - g2[0] * r1) / det))
    return verts, shoelace_area(verts)


def hexagon_pair(p: float, m: int = 0) -> HexagonPair:
    """Both extremal hexagons of 2^m * D_p (requires p > 1)."""
    ins_v, ins_a = inscribed_hexagon(p, m)
    cir_v, cir_a = circumscribed_hexagon(p, m)
    return HexagonPair(
        inscribed_vertices=tuple(ins_v),
        circumscribed_vertices=tuple(cir_v),
        inscribed_area=ins_a,
        circumscribed_area=cir_a,
    )
