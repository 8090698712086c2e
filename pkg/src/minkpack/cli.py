"""Command-line front end.

Subcommands cover every computation in the library: scalar constants,
lattice construction, packing densities, extremal hexagons, the moduli-space
scan, parameter sweeps to CSV, SVG renders, the verification suite, and
limit membership of the doubling chain.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
3 I/O error, 4 solver failure.
"""

from __future__ import annotations

import argparse
import sys

from .domain import BallSpec, classify
from .dyadic import limit_membership, subgroup_index
from .lattice import CriticalLatticeKind, admissibility_check, critical_lattice
from .moduli import oracle_min
from .packing import (
    QuadratureError,
    ball_area,
    circumscribed_hexagon,
    inscribed_hexagon,
    kind_for_branch,
    packing_density,
)
from .render import render_hexagons, render_moduli, render_packing
from .solvers import (
    SolverError,
    critical_constants,
    critical_determinant,
    default_davis_constant,
)
from .tables import sweep_rows, write_sweep_csv
from .verification import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_SOLVER = 4


def _num_text(x: float) -> str:
    return format(x, ".6g")


def _num_csv(x: float) -> str:
    return format(x, ".17g")


def _emit_record(fields: list[tuple[str, str]], fmt: str) -> None:
    if fmt == "csv":
        print(",".join(name for name, _ in fields))
        print(",".join(value for _, value in fields))
    else:
        width = max(len(name) for name, _ in fields)
        for name, value in fields:
            print(f"{name:<{width}}  {value}")


def _fmt_value(x, fmt: str) -> str:
    if isinstance(x, float):
        return _num_csv(x) if fmt == "csv" else _num_text(x)
    return str(x)


def cmd_constants(args) -> int:
    spec = BallSpec(args.p, args.m)
    constants = critical_constants(args.p, tol=args.tol)
    davis = default_davis_constant()
    delta, branch = critical_determinant(spec, constants, davis)
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("m", str(args.m)),
        ("class", classify(args.p, davis).value),
        ("tau_p", _fmt_value(constants.tau_p, f)),
        ("sigma_p", _fmt_value(constants.sigma_p, f)),
        ("delta0", _fmt_value(4.0 ** args.m * constants.delta0, f)),
        ("delta1", _fmt_value(4.0 ** args.m * constants.delta1, f)),
        ("delta", _fmt_value(delta, f)),
        ("branch", branch.value),
        ("davis_p0", _fmt_value(davis, f)),
    ]
    _emit_record(fields, f)
    return EXIT_OK


def cmd_lattice(args) -> int:
    spec = BallSpec(args.p, args.m)
    constants = critical_constants(args.p)
    delta, branch = critical_determinant(spec, constants)
    if args.kind == "auto":
        kind = kind_for_branch(branch)
    else:
        kind = CriticalLatticeKind(args.kind)
    basis = critical_lattice(args.p, kind, args.m, constants)
    admissible, pairs = admissibility_check(basis, spec, tol=args.tol)
    base = critical_lattice(args.p, kind, 0, constants)
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("m", str(args.m)),
        ("kind", kind.value),
        ("a_x", _fmt_value(basis.a[0], f)),
        ("a_y", _fmt_value(basis.a[1], f)),
        ("b_x", _fmt_value(basis.b[0], f)),
        ("b_y", _fmt_value(basis.b[1], f)),
        ("det", _fmt_value(basis.det, f)),
        ("critical_delta", _fmt_value(delta, f)),
        ("branch", branch.value),
        ("admissible", str(admissible).lower()),
        ("boundary_pairs", str(pairs)),
        ("index_in_level0", _fmt_value(subgroup_index(basis, base), f)),
    ]
    _emit_record(fields, f)
    return EXIT_OK


def cmd_density(args) -> int:
    report = packing_density(args.p, args.m)
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("m", str(args.m)),
        ("class", classify(args.p, default_davis_constant()).value),
        ("branch", report.branch.value),
        ("area", _fmt_value(ball_area(args.p, args.m), f)),
        ("critical_delta", _fmt_value(report.critical_determinant, f)),
        ("density", _fmt_value(report.density, f)),
        ("packing_admissible", str(report.verified_admissible).lower()),
        ("boundary_pairs", str(report.boundary_pairs)),
    ]
    _emit_record(fields, f)
    return EXIT_OK


def cmd_hexagons(args) -> int:
    spec = BallSpec(args.p, args.m)
    delta, _ = critical_determinant(spec)
    _, ihma = inscribed_hexagon(args.p, args.m)
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("m", str(args.m)),
        ("delta", _fmt_value(delta, f)),
        ("inscribed_area", _fmt_value(ihma, f)),
        ("inscribed_vs_3delta", _fmt_value(ihma - 3.0 * delta, f)),
    ]
    if args.p == 1.0:
        fields.append(("circumscribed_area", _fmt_value(4.0 * delta, f)))
        fields.append(("circumscribed_note", "formula-only at p=1 (corner contacts)"))
    else:
        _, shma = circumscribed_hexagon(args.p, args.m)
        fields.append(("circumscribed_area", _fmt_value(shma, f)))
        fields.append(("circumscribed_vs_4delta", _fmt_value(shma - 4.0 * delta, f)))
        fields.append(("area_ratio", _fmt_value(shma / ihma, f)))
    _emit_record(fields, f)
    return EXIT_OK


def cmd_oracle(args) -> int:
    sigma_star, delta_star = oracle_min(args.p, args.grid)
    closed, branch = critical_determinant(BallSpec(args.p, 0))
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("grid", str(args.grid)),
        ("sigma_star", _fmt_value(sigma_star, f)),
        ("oracle_delta", _fmt_value(delta_star, f)),
        ("closed_delta", _fmt_value(closed, f)),
        ("branch", branch.value),
        ("gap", _fmt_value(delta_star - closed, f)),
    ]
    _emit_record(fields, f)
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = sweep_rows(
        args.p_min, args.p_max, args.steps, with_oracle=args.oracle, grid_size=args.grid
    )
    write_sweep_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    if args.what == "packing":
        canvas = render_packing(args.p, args.m)
    elif args.what == "hexagons":
        canvas = render_hexagons(args.p, args.m)
    else:
        canvas = render_moduli(args.p, args.m)
    canvas.write(args.out)
    print(f"wrote {args.what} figure to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks(level=args.level, tau_perturbation=args.debug_perturb_tau)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status}  {r.name:<26} residual={r.residual:.3e} "
            f"(tol {r.threshold:.1e})  {r.detail}"
        )
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}")
        return EXIT_VERIFY_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def cmd_limits(args) -> int:
    member, level = limit_membership(args.p, (args.x, args.y))
    contained_below = (
        "n/a (level 0)"
        if level == 0
        else str(BallSpec(args.p, level - 1).contains((args.x, args.y))).lower()
    )
    f = args.format
    fields = [
        ("p", _fmt_value(float(args.p), f)),
        ("x", _fmt_value(float(args.x), f)),
        ("y", _fmt_value(float(args.y), f)),
        ("member", str(member).lower()),
        ("level", str(level)),
        ("in_level_below", contained_below),
    ]
    _emit_record(fields, f)
    return EXIT_OK


def _add_common(parser, p_flag=True, m_flag=True, fmt_flag=True, tol=None):
    if p_flag:
        parser.add_argument("--p", type=float, required=True, help="exponent p >= 1")
    if m_flag:
        parser.add_argument(
            "--m", type=int, default=0, help="dyadic dilation level (default 0)"
        )
    if fmt_flag:
        parser.add_argument(
            "--format", choices=("text", "csv"), default="text", help="output format"
        )
    if tol is not None:
        parser.add_argument(
            "--tol", type=float, default=tol, help=f"tolerance (default {tol:g})"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minkpack",
        description=(
            "Critical lattices, optimal packing densities, and extremal "
            "hexagons of planar L^p balls and their dyadic dilates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("constants", help="scalar constants for one exponent")
    _add_common(sp, tol=1e-12)
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("lattice", help="critical lattice basis and checks")
    _add_common(sp, tol=1e-9)
    sp.add_argument(
        "--kind",
        choices=("auto", "lambda0", "lambda1"),
        default="auto",
        help="which critical lattice (default: branch-selected)",
    )
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("density", help="optimal packing density report")
    _add_common(sp)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("hexagons", help="extremal hexagon areas")
    _add_common(sp)
    sp.set_defaults(func=cmd_hexagons)

    sp = sub.add_parser("oracle", help="moduli-space scan vs closed form")
    _add_common(sp, m_flag=False)
    sp.add_argument("--grid", type=int, default=1000, help="sigma grid size")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="tabulate quantities over a p range to CSV")
    sp.add_argument("--p-min", type=float, required=True)
    sp.add_argument("--p-max", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out", required=True, help="output CSV path")
    sp.add_argument("--oracle", action="store_true", help="add moduli-scan columns")
    sp.add_argument("--grid", type=int, default=1000, help="oracle sigma grid size")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("render", help="SVG figure")
    _add_common(sp, fmt_flag=False)
    sp.add_argument(
        "--what", choices=("packing", "hexagons", "moduli"), required=True
    )
    sp.add_argument("--out", required=True, help="output SVG path")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--level", choices=("fast", "full"), default="fast")
    sp.add_argument(
        "--debug-perturb-tau",
        type=float,
        default=0.0,
        help=argparse.SUPPRESS,  # sensitivity probe: shifts tau_p inside checks
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("limits", help="minimal containment level of a point")
    _add_common(sp, m_flag=False)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--y", type=float, required=True)
    sp.set_defaults(func=cmd_limits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SolverError, QuadratureError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
