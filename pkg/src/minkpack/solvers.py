"""Scalar equations behind the critical determinant of planar L^p balls.

The moduli strip of three-contact admissible lattices (see
:mod:`minkpack.moduli`) has two distinguished edges, and the critical
determinant of 2^m * D_p is the smaller of the two edge values:

* the sigma = sigma_p edge with sigma_p = (2^p - 1)^(1/p), giving
  delta0 = 4^m * sigma_p / 2, and
* the sigma = 1 edge, whose slope parameter tau_p solves
  2 (1 - tau)^p = 1 + tau^p on [0, 1), giving
  delta1 = 4^(m - 1/p) (1 + tau_p) / (1 - tau_p).

The sigma = 1 edge wins for 1 <= p <= 2 and again for p >= p0; the
sigma_p edge wins in between.  The crossover exponent p0 ~ 2.5725 (the
Davis constant) is the unique root of delta0(p) = delta1(p) in
(2.57, 2.58).

Everything here is a pure function of its inputs; tolerances are explicit
parameters, never hidden constants.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .domain import BallSpec, Branch

log = logging.getLogger(__name__)

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_DAVIS_TOL = 1e-10
DAVIS_BRACKET = (2.57, 2.58)

#: bisection runs until the bracket is this wide, then secant polishing
#: restores fast tail convergence
_COARSE_BRACKET = 1e-3


class SolverError(RuntimeError):
    """A bracketing root-finder could not do its job.

    For the equations in this module a missing sign change signals a bug in
    the function being solved, not bad user input, so this is kept separate
    from ValueError.
    """


def _require_p(p: float) -> None:
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")


def _require_m(m: int) -> None:
    if int(m) != m or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m}")


def _bracketed_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iter: int = 200,
) -> float:
    """Root of f on [lo, hi] with |f(root)| < tol.

    Bisection narrows the bracket to width ``_COARSE_BRACKET``; from there
    secant steps take over, falling back to bisection whenever a step would
    leave the bracket, so convergence is guaranteed for any continuous f
    with a sign change.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    flo, fhi = f(lo), f(hi)
    if abs(flo) < tol:
        return lo
    if abs(fhi) < tol:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise SolverError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo:.6e}, f(hi)={fhi:.6e}"
        )

    while hi - lo > _COARSE_BRACKET:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if abs(fmid) < tol:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid

    x_prev, f_prev = lo, flo
    x_cur, f_cur = hi, fhi
    for _ in range(max_iter):
        denom = f_cur - f_prev
        if denom != 0.0:
            x_next = x_cur - f_cur * (x_cur - x_prev) / denom
        else:
            x_next = 0.5 * (lo + hi)
        if not lo < x_next < hi:
            x_next = 0.5 * (lo + hi)
        f_next = f(x_next)
        if abs(f_next) < tol:
            return x_next
        if (f_next > 0.0) == (flo > 0.0):
            lo, flo = x_next, f_next
        else:
            hi, fhi = x_next, f_next
        x_prev, f_prev = x_cur, f_cur
        x_cur, f_cur = x_next, f_next
        if hi - lo <= 4.0 * math.ulp(max(abs(lo), abs(hi))):
            # bracket exhausted at double precision
            best, fbest = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
            if abs(fbest) < tol:
                return best
            raise SolverError(
                f"bracket exhausted at x={best!r} with residual {fbest:.3e} "
                f"(requested tol {tol:.3e} is below double precision here)"
            )
    raise SolverError(f"no convergence after {max_iter} iterations")


def solve_tau_p(p: float, tol: float = DEFAULT_ROOT_TOL) -> float:
    """The unique root tau_p in [0, 1) of 2 (1 - tau)^p = 1 + tau^p.

    The residual 2(1 - t)^p - (1 + t^p) decreases strictly on (0, 1)
    (both terms of its derivative are negative), so the bracket [0, 1]
    contains exactly one sign change.  Returns tau with residual below tol.
    """
    _require_p(p)

    def residual(t: float) -> float:
        return 2.0 * (1.0 - t) ** p - (1.0 + t ** p)

    return _bracketed_root(residual, 0.0, 1.0, tol)


def sigma_p(p: float) -> float:
    """The upper edge coordinate sigma_p = (2^p - 1)^(1/p) of the moduli strip.

    Evaluated as 2 * (1 - 2^-p)^(1/p); same value, no overflow for large p.
    Increases from 1 at p = 1 toward the limit 2 (from p ~ 50 on, the exact
    value is within half an ulp of 2.0 and rounds to it).
    """
    _require_p(p)
    return 2.0 * math.exp(math.log1p(-(2.0 ** -p)) / p)


def delta_branch0(p: float, m: int = 0) -> float:
    """Determinant of the sigma = sigma_p edge lattice for 2^m * D_p.

    Equals 4^m * sigma_p / 2: the level-m lattice is the level-0 lattice
    scaled by 2^m, and scaling a planar lattice by 2 multiplies its
    determinant by 4.
    """
    _require_p(p)
    _require_m(m)
    return 4.0 ** m * 0.5 * sigma_p(p)


def delta_branch1(p: float, m: int = 0, tau: float | None = None) -> float:
    """Determinant of the sigma = 1 edge lattice for 2^m * D_p.

    Equals 4^(m - 1/p) (1 + tau_p)/(1 - tau_p), where tau should be the root
    from :func:`solve_tau_p` (it is solved here when omitted).
    """
    _require_p(p)
    _require_m(m)
    if tau is None:
        tau = solve_tau_p(p)
    if not 0.0 <= tau < 1.0:
        raise ValueError(f"tau must lie in [0, 1), got {tau}")
    return 4.0 ** (m - 1.0 / p) * (1.0 + tau) / (1.0 - tau)


def solve_davis_constant(tol: float = DEFAULT_DAVIS_TOL) -> float:
    """The exponent p0 in (2.57, 2.58) where the two edge values cross.

    Root of delta_branch0(p) - delta_branch1(p); at the returned p0 the two
    branch values differ by less than tol.  A missing sign change over the
    bracket would mean the branch evaluators are broken, hence SolverError.
    """

    def gap(p: float) -> float:
        # the inner root is solved tighter than the outer tolerance so it
        # never limits the crossing accuracy
        return delta_branch0(p) - delta_branch1(p, tau=solve_tau_p(p, tol=1e-14))

    lo, hi = DAVIS_BRACKET
    return _bracketed_root(gap, lo, hi, tol)


@lru_cache(maxsize=1)
def default_davis_constant() -> float:
    """Davis constant at the default tolerance, solved once per process."""
    return solve_davis_constant()


@dataclass(frozen=True)
class CriticalConstants:
    """All level-0 scalar constants attached to one exponent."""

    p: float
    tau_p: float
    sigma_p: float
    delta0: float  # sigma = sigma_p edge value at m = 0
    delta1: float  # sigma = 1 edge value at m = 0


def critical_constants(p: float, tol: float = DEFAULT_ROOT_TOL) -> CriticalConstants:
    """Solve and package tau_p, sigma_p and both m = 0 branch values."""
    _require_p(p)
    tau = solve_tau_p(p, tol)
    return CriticalConstants(
        p=p,
        tau_p=tau,
        sigma_p=sigma_p(p),
        delta0=delta_branch0(p, 0),
        delta1=delta_branch1(p, 0, tau),
    )


_label_note_logged = False


def _note_branch_labeling(p: float, branch: Branch) -> None:
    # Some statements of the dilation formulas in the literature carry the
    # two edge labels swapped; the moduli scan (minkpack.moduli.oracle_min)
    # confirms the assignment used here.  Logged once, at debug level.
    global _label_note_logged
    if not _label_note_logged:
        log.debug(
            "branch %s selected at p=%g; a label-swapped statement of the "
            "edge formulas would name the other branch here (the moduli-space "
            "minimum confirms this assignment)",
            branch.value,
            p,
        )
        _label_note_logged = True


def critical_determinant(
    spec: BallSpec,
    constants: CriticalConstants | None = None,
    davis_constant: float | None = None,
) -> tuple[float, Branch]:
    """Critical determinant of 2^m * D_p together with the branch used.

    The sigma = 1 edge value applies for 1 <= p <= 2 and p >= p0, the
    sigma_p edge value for 2 < p < p0; both agree at p = 2 and p = p0.
    Dilation scales the result by 4^m.
    """
    p = spec.p
    if constants is None:
        constants = critical_constants(p)
    elif constants.p != p:
        raise ValueError(
            f"constants were solved for p={constants.p}, spec has p={p}"
        )
    if davis_constant is None:
        davis_constant = default_davis_constant()

    if 1.0 <= p <= 2.0 or p >= davis_constant:
        value, branch = constants.delta1, Branch.DELTA1
    else:
        value, branch = constants.delta0, Branch.DELTA0
    if p != 2.0 and p != davis_constant:
        _note_branch_labeling(p, branch)
    return 4.0 ** spec.m * value, branch
