"""SVG figures: packings, extremal hexagons, and the moduli curve.

All three renders are pure functions of (p, m) with fixed sampling grids
and fixed element order, so repeated calls yield byte-identical documents.
"""

from __future__ import annotations

import numpy as np

from .domain import BallSpec
from .lattice import critical_lattice, enumerate_points
from .moduli import moduli_delta, solve_tau_of_sigma
from .packing import kind_for_branch, boundary_points, circumscribed_hexagon, inscribed_hexagon
from .solvers import critical_constants, critical_determinant, sigma_p, solve_tau_p
from .svgfig import SvgCanvas

_OUTLINE_SAMPLES = 192


def _contact_points(p: float, m: int):
    constants = critical_constants(p)
    _, branch = critical_determinant(BallSpec(p, m), constants)
    basis = critical_lattice(p, kind_for_branch(branch), m, constants)
    a, b = basis.a, basis.b
    ab = (a[0] + b[0], a[1] + b[1])
    return [a, ab, b, (-a[0], -a[1]), (-ab[0], -ab[1]), (-b[0], -b[1])], branch


def render_packing(p: float, m: int = 0) -> SvgCanvas:
    """Ball translates on the optimal packing lattice, contacts marked.

    The window is fixed at [-4 * 2^m, 4 * 2^m]^2 so at least two rings of
    translates are visible at every level.
    """
    spec = BallSpec(p, m)
    half = 4.0 * spec.scale
    canvas = SvgCanvas(half)
    canvas.comment(f"optimal packing of 2^{m} ball with exponent p={p!r}")

    constants = critical_constants(p)
    _, branch = critical_determinant(spec, constants)
    packing = critical_lattice(p, kind_for_branch(branch), m + 1, constants)
    rim = boundary_points(p, spec.scale, _OUTLINE_SAMPLES)

    centers = [(0.0, 0.0)] + enumerate_points(packing, radius=half + spec.scale)
    for cx, cy in centers:
        canvas.polygon(
            [(cx + x, cy + y) for x, y in rim], stroke="#202020", width=0.004 * half
        )
    contacts, _ = _contact_points(p, m)
    for c in contacts:
        canvas.dot(c, r=0.012 * half)
    return canvas


def render_hexagons(p: float, m: int = 0) -> SvgCanvas:
    """The ball with its minimal inscribed and circumscribed hexagons.

    At p = 1 the circumscribed hexagon is omitted (corner contacts admit no
    unique tangent) and the document carries a note saying so.
    """
    spec = BallSpec(p, m)
    half = 1.7 * spec.scale
    canvas = SvgCanvas(half)
    canvas.comment(f"extremal hexagons of 2^{m} ball with exponent p={p!r}")
    canvas.polygon(
        boundary_points(p, spec.scale, _OUTLINE_SAMPLES),
        stroke="#202020",
        width=0.004 * half,
    )
    ins_v, _ = inscribed_hexagon(p, m)
    canvas.polygon(ins_v, stroke="#1040c0", width=0.005 * half)
    if p == 1.0:
        note = (
            "circumscribed hexagon omitted at p=1: tangent directions at the "
            "corner contacts are not unique (formula value is 4*Delta)"
        )
        canvas.comment(note)
        canvas.text((-half * 0.95, -half * 0.92), note, font_size=0.035 * half)
    else:
        cir_v, _ = circumscribed_hexagon(p, m)
        canvas.polygon(cir_v, stroke="#108040", width=0.005 * half)
    contacts, _ = _contact_points(p, m)
    for c in contacts:
        canvas.dot(c, r=0.015 * half)
    return canvas


def render_moduli(p: float, m: int = 0) -> SvgCanvas:
    """Determinant over the moduli strip, branch endpoints and minimum marked."""
    spec = BallSpec(p, m)
    half = 1.2
    canvas = SvgCanvas(half)
    canvas.comment(f"moduli determinant curve for exponent p={p!r}, level m={m}")

    sp = sigma_p(p)
    scale = 4.0 ** m
    tau_hi = solve_tau_p(p)
    if sp <= 1.0 + 1e-15:
        delta = scale * moduli_delta(p, 1.0, solve_tau_of_sigma(p, 1.0, tau_hi=tau_hi))
        canvas.dot((0.0, 0.0), r=0.03)
        canvas.text((-1.0, -0.9), f"p={p:.6g}: strip degenerates, delta={delta:.6g}", 0.06)
        return canvas

    sigmas = np.linspace(1.0, sp, 200)
    deltas = np.array(
        [scale * moduli_delta(p, float(s), solve_tau_of_sigma(p, float(s), tau_hi=tau_hi)) for s in sigmas]
    )
    dmin, dmax = float(np.min(deltas)), float(np.max(deltas))
    spread = dmax - dmin if dmax > dmin else 1.0

    def to_xy(sigma: float, delta: float):
        x = -1.0 + 2.0 * (sigma - 1.0) / (sp - 1.0)
        y = -0.8 + 1.6 * (delta - dmin) / spread
        return (x, y)

    frame = [(-1.0, -0.8), (1.0, -0.8), (1.0, 0.8), (-1.0, 0.8)]
    canvas.polygon(frame, stroke="#808080", width=0.004)
    canvas.polyline(
        [to_xy(float(s), float(d)) for s, d in zip(sigmas, deltas)],
        stroke="#1040c0",
        width=0.008,
    )
    i_min = int(np.argmin(deltas))
    canvas.dot(to_xy(float(sigmas[0]), float(deltas[0])), r=0.025, fill="#108040")
    canvas.dot(to_xy(float(sigmas[-1]), float(deltas[-1])), r=0.025, fill="#108040")
    canvas.dot(to_xy(float(sigmas[i_min]), float(deltas[i_min])), r=0.02)
    canvas.text((-1.0, -1.05), f"p={p:.6g} m={m}  sigma in [1, {sp:.6g}]", 0.06)
    canvas.text(
        (-1.0, 0.95),
        f"delta(1)={deltas[0]:.8g}  delta(sigma_p)={deltas[-1]:.8g}  min={dmin:.8g}",
        0.06,
    )
    return canvas
