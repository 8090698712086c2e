"""Construction and verification of critical lattices of 2^m * D_p.

A three-contact admissible lattice is spanned by two boundary points of the
ball: ``a`` at slope tau in the right half-plane and ``b`` at slope sigma
mirrored into the left half-plane.  The pair (tau, sigma) coordinates the
moduli strip; the two critical lattices sit at its corners:

* ``LAMBDA0`` at (tau = 0, sigma = sigma_p), which contains (2^m, 0);
* ``LAMBDA1`` at (tau = tau_p, sigma = 1), which contains
  2^m * (-2^(-1/p), 2^(-1/p)).

Admissibility (no nonzero lattice point interior to the domain) and
boundary-contact counting are checked by exhaustive enumeration over a
window that provably covers the domain.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .domain import BallSpec, LatticeBasis, Vec
from .solvers import CriticalConstants, critical_constants

#: refuse enumeration windows needing more than this many integer steps per
#: axis; reached only for near-degenerate bases
_MAX_INDEX_BOUND = 4096


class CriticalLatticeKind(Enum):
    """Which corner of the moduli strip a critical lattice comes from."""

    LAMBDA0 = "lambda0"  # tau = 0, sigma = sigma_p
    LAMBDA1 = "lambda1"  # tau = tau_p, sigma = 1


def build_lattice(p: float, tau: float, sigma: float, m: int = 0) -> LatticeBasis:
    """Basis of the moduli-strip lattice with slope parameters tau < sigma.

    a = 2^m ((1 + tau^p)^(-1/p), tau (1 + tau^p)^(-1/p)) lies on the
    boundary of 2^m * D_p, as does b, the mirrored point at slope sigma:
    b = 2^m (-(1 + sigma^p)^(-1/p), sigma (1 + sigma^p)^(-1/p)).
    """
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if int(m) != m or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m}")
    if not 0.0 <= tau < sigma:
        raise ValueError(f"need 0 <= tau < sigma, got tau={tau}, sigma={sigma}")
    s = 2.0 ** m
    fa = (1.0 + tau ** p) ** (-1.0 / p)
    fb = (1.0 + sigma ** p) ** (-1.0 / p)
    return LatticeBasis(a=(s * fa, s * tau * fa), b=(-s * fb, s * sigma * fb))


def critical_lattice(
    p: float,
    kind: CriticalLatticeKind,
    m: int = 0,
    constants: CriticalConstants | None = None,
) -> LatticeBasis:
    """The level-m critical lattice of the requested kind.

    Its determinant equals the matching branch value delta0/delta1 scaled
    by 4^m.
    """
    if constants is None:
        constants = critical_constants(p)
    elif constants.p != p:
        raise ValueError(f"constants were solved for p={constants.p}, not p={p}")
    if kind is CriticalLatticeKind.LAMBDA0:
        return build_lattice(p, 0.0, constants.sigma_p, m)
    return build_lattice(p, constants.tau_p, 1.0, m)


def enumerate_points(basis: LatticeBasis, radius: float) -> list[Vec]:
    """All nonzero lattice points with sup norm <= radius, without duplicates.

    The integer search box comes from the row-sum norm of the inverse basis
    matrix: for z = u a + v b with ||z||_inf <= radius, each of |u|, |v| is
    at most the corresponding inverse row sum times radius.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    ax, ay = basis.a
    bx, by = basis.b
    det = ax * by - ay * bx  # signed; nonzero by LatticeBasis invariant
    inv_rows = ((by / det, -bx / det), (-ay / det, ax / det))
    bound = max(abs(r0) + abs(r1) for r0, r1 in inv_rows) * radius
    n = int(bound) + 1
    if n > _MAX_INDEX_BOUND:
        raise ValueError(
            f"enumeration window needs index bound {n}: basis is near-degenerate "
            f"relative to radius {radius}"
        )
    u, v = np.meshgrid(np.arange(-n, n + 1), np.arange(-n, n + 1), indexing="ij")
    x = u * ax + v * bx
    y = u * ay + v * by
    keep = (np.maximum(np.abs(x), np.abs(y)) <= radius) & ((u != 0) | (v != 0))
    return [(float(px), float(py)) for px, py in zip(x[keep], y[keep])]


def admissibility_check(
    basis: LatticeBasis, spec: BallSpec, tol: float = 1e-9
) -> tuple[bool, int]:
    """Admissibility of a lattice for 2^m * D_p, plus its boundary-pair count.

    Admissible means every nonzero lattice point z satisfies
    |x/2^m|^p + |y/2^m|^p >= 1 - tol.  Points whose power sum is within tol
    of 1 are boundary contacts; they come in antipodal pairs and the number
    of pairs is returned (3 for critical lattices, except the p = 1 corner
    case where the tau = 0 lattice picks up a fourth pair at (0, +-2^m)).
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    # small relative margin keeps contacts computed with rounding error
    # inside the window; no lattice point of interest sits in the margin
    radius = spec.scale * (1.0 + 1e-6)
    admissible = True
    contacts = 0
    for z in enumerate_points(basis, radius):
        s = spec.power_sum(z)
        if s < 1.0 - tol:
            admissible = False
        if abs(s - 1.0) <= tol:
            contacts += 1
    return admissible, contacts // 2
