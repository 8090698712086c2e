"""Brute-force minimization over the moduli strip of admissible lattices.

This is the independent route to the critical determinant: scan sigma over
[1, sigma_p], solve the third-contact condition for tau at each node,
evaluate the determinant (tau + sigma)(1 + tau^p)^(-1/p)(1 + sigma^p)^(-1/p)
and take the minimum.  No closed-form branch value enters the scan, so the
result can adjudicate which edge of the strip the true minimum sits on.

For p = 1 the strip collapses to the single point sigma = 1 (sigma_1 = 1)
where the contact condition holds identically in tau and the determinant is
constant 1/2, so the scan degenerates gracefully.
"""

from __future__ import annotations

import math

import numpy as np

from .domain import ModuliPoint
from .lattice import build_lattice
from .solvers import SolverError, _bracketed_root, sigma_p, solve_tau_p

#: widen the tau bracket past tau_p by this much; the root sits exactly at
#: tau_p when sigma = 1 and endpoint rounding must not push it outside
TAU_BRACKET_PAD = 1e-9

DEFAULT_CONTACT_TOL = 1e-12


def contact_residual(p: float, tau: float, sigma: float) -> float:
    """Power sum of the third pair a + b, minus 1 (zero at three contacts).

    The basis points a and b lie on the boundary by construction; this
    residual measures how far their sum is from it.
    """
    basis = build_lattice(p, tau, sigma, 0)
    x = basis.a[0] + basis.b[0]
    y = basis.a[1] + basis.b[1]
    if x < 0.0:
        # sign convention assertion: tau <= sigma forces a_x + b_x >= 0;
        # failing it means the inputs left the parametrized region
        raise SolverError(
            f"a_x + b_x = {x} < 0 at tau={tau}, sigma={sigma}: outside the "
            "scanned moduli region"
        )
    return x ** p + y ** p - 1.0


def solve_tau_of_sigma(
    p: float,
    sigma: float,
    tol: float = DEFAULT_CONTACT_TOL,
    tau_hi: float | None = None,
) -> float:
    """The tau in [0, tau_p] putting the third pair a + b on the boundary.

    The residual is negative at tau = 0 for sigma < sigma_p and increases
    through zero; at sigma = sigma_p the root is 0, at sigma = 1 it is
    tau_p itself.  ``tau_hi`` lets callers reuse a solved tau_p across a
    scan.  Raises SolverError when sigma is outside the admissible strip.
    """
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if tau_hi is None:
        tau_hi = solve_tau_p(p)
    lo, hi = 0.0, tau_hi + TAU_BRACKET_PAD
    flo = contact_residual(p, lo, sigma)
    if abs(flo) <= tol:
        return 0.0
    fhi = contact_residual(p, hi, sigma)
    if abs(fhi) <= tol:
        return tau_hi
    if (flo > 0.0) == (fhi > 0.0):
        raise SolverError(
            f"no three-contact lattice at sigma={sigma!r} for p={p}: residuals "
            f"{flo:.3e} and {fhi:.3e} do not bracket a root"
        )
    root = _bracketed_root(lambda t: contact_residual(p, t, sigma), lo, hi, tol)
    return min(max(root, 0.0), tau_hi)


def moduli_delta(p: float, sigma: float, tau: float) -> float:
    """Determinant (tau + sigma)(1 + tau^p)^(-1/p)(1 + sigma^p)^(-1/p).

    Agrees with the cross-product determinant of the constructed basis;
    the two formulas are compared in the test suite.
    """
    return (
        (tau + sigma)
        * (1.0 + tau ** p) ** (-1.0 / p)
        * (1.0 + sigma ** p) ** (-1.0 / p)
    )


def moduli_point(p: float, sigma: float, tol: float = DEFAULT_CONTACT_TOL) -> ModuliPoint:
    """Solve tau and package the full moduli-strip point at this sigma."""
    tau = solve_tau_of_sigma(p, sigma, tol)
    return ModuliPoint(p=p, sigma=sigma, tau=tau, delta=moduli_delta(p, sigma, tau))


def _golden_min(f, lo: float, hi: float, iters: int = 70) -> tuple[float, float]:
    """Golden-section minimum of a unimodal f on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
        if hi - lo < 1e-13:
            break
    return (x1, f1) if f1 <= f2 else (x2, f2)


def oracle_min(p: float, grid_size: int = 1000) -> tuple[float, float]:
    """Certified minimum of the determinant over the moduli strip.

    Scans a uniform sigma grid on [1, sigma_p] (endpoints included, so an
    edge minimum is evaluated exactly rather than approached), then refines
    around the best node by golden-section search.  Returns
    (sigma_star, delta_star).
    """
    if grid_size < 100:
        raise ValueError(f"grid_size must be at least 100, got {grid_size}")
    sp = sigma_p(p)
    tau_hi = solve_tau_p(p)
    sigmas = np.linspace(1.0, sp, grid_size)

    def delta_at(sigma: float) -> float:
        tau = solve_tau_of_sigma(p, sigma, tau_hi=tau_hi)
        return moduli_delta(p, sigma, tau)

    deltas = [delta_at(s) for s in sigmas]
    i = int(np.argmin(deltas))
    best_sigma, best_delta = float(sigmas[i]), deltas[i]

    lo = float(sigmas[max(i - 1, 0)])
    hi = float(sigmas[min(i + 1, grid_size - 1)])
    if hi > lo:
        s_ref, d_ref = _golden_min(delta_at, lo, hi)
        if d_ref < best_delta:
            best_sigma, best_delta = s_ref, d_ref
    return best_sigma, best_delta
