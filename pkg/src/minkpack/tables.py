"""Parameter sweeps over p and their CSV serialization.

CSV numbers carry 17 significant digits so doubles survive a round trip
through :func:`read_sweep_csv`; the column set is fixed and the oracle
columns are left empty unless the scan was requested.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .domain import classify
from .moduli import oracle_min
from .packing import circumscribed_hexagon, inscribed_hexagon, packing_density
from .solvers import default_davis_constant

SWEEP_COLUMNS = (
    "p",
    "class",
    "branch",
    "delta",
    "density",
    "ihma",
    "shma",
    "oracle_delta",
    "oracle_gap",
)


@dataclass(frozen=True)
class SweepRow:
    p: float
    domain_class: str
    branch: str
    delta: float
    density: float
    ihma: float
    shma: float
    oracle_delta: float | None = None
    oracle_gap: float | None = None


def _num(x: float) -> str:
    return format(x, ".17g")


def sweep_rows(
    p_min: float,
    p_max: float,
    steps: int,
    with_oracle: bool = False,
    grid_size: int = 1000,
) -> list[SweepRow]:
    """One row of packing quantities per grid exponent in [p_min, p_max].

    The circumscribed-hexagon column falls back to the formula value
    4 * delta at p = 1, where the tangent construction is undefined.
    """
    if not 1.0 <= p_min:
        raise ValueError(f"p_min must be >= 1, got {p_min}")
    if not p_min < p_max:
        raise ValueError(f"need p_min < p_max, got {p_min} >= {p_max}")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    davis = default_davis_constant()
    rows = []
    for p in np.linspace(p_min, p_max, steps):
        p = float(p)
        report = packing_density(p, 0)
        delta, branch = report.critical_determinant, report.branch
        _, ihma = inscribed_hexagon(p, 0)
        if p == 1.0:
            shma = 4.0 * delta
        else:
            _, shma = circumscribed_hexagon(p, 0)
        oracle_delta = oracle_gap = None
        if with_oracle:
            _, oracle_delta = oracle_min(p, grid_size)
            oracle_gap = oracle_delta - delta
        rows.append(
            SweepRow(
                p=p,
                domain_class=classify(p, davis).value,
                branch=branch.value,
                delta=delta,
                density=report.density,
                ihma=ihma,
                shma=shma,
                oracle_delta=oracle_delta,
                oracle_gap=oracle_gap,
            )
        )
    return rows


def format_sweep_csv(rows: list[SweepRow]) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                (
                    _num(r.p),
                    r.domain_class,
                    r.branch,
                    _num(r.delta),
                    _num(r.density),
                    _num(r.ihma),
                    _num(r.shma),
                    "" if r.oracle_delta is None else _num(r.oracle_delta),
                    "" if r.oracle_gap is None else _num(r.oracle_gap),
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_sweep_csv(rows: list[SweepRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_sweep_csv(rows))


def read_sweep_csv(path: str) -> list[SweepRow]:
    """Parse a sweep CSV back into rows (inverse of :func:`write_sweep_csv`)."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != SWEEP_COLUMNS:
            raise ValueError(f"unexpected sweep CSV header: {reader.fieldnames}")
        for rec in reader:
            rows.append(
                SweepRow(
                    p=float(rec["p"]),
                    domain_class=rec["class"],
                    branch=rec["branch"],
                    delta=float(rec["delta"]),
                    density=float(rec["density"]),
                    ihma=float(rec["ihma"]),
                    shma=float(rec["shma"]),
                    oracle_delta=float(rec["oracle_delta"]) if rec["oracle_delta"] else None,
                    oracle_gap=float(rec["oracle_gap"]) if rec["oracle_gap"] else None,
                )
            )
    return rows
