"""Command-line front end.

Subcommands: ``spectrum``, ``tangle``, ``sweep``, ``optimal-angle``,
``mixing-check`` and ``approx-check``. Scalar reports go to stdout as JSON;
grids are written to ``--out`` as CSV or JSON. Every output carries
``schema_version``.

Exit codes: 0 success, 2 usage or invalid parameters, 3 I/O failure,
4 numerical failure.
"""
import argparse
import csv
import json
import sys

from . import __version__
from .approx import (
    exact_ground_concurrence,
    gap_approx,
    ground_concurrence_approx,
    ground_energy_approx,
    max_condition_approx,
    max_condition_exact,
    theta_star_analytic,
    theta_star_numeric,
    two_level_optimal_gap,
)
from .entanglement import Pair
from .hamiltonian import RingConfig, from_polar
from .mixing import canonical_eigenvectors, four_level_counterexample, level_mixing_report
from .pipeline import ring_spectrum, thermal_concurrence
from .sweep import DEFAULT_AXES, DEFAULT_STEPS, SweepSpec, run_sweep

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NUMERIC = 0, 2, 3, 4

KINDS = {"b-t": "B_T", "bx-bz": "Bx_Bz", "b-theta": "B_theta"}


class UsageError(Exception):
    pass


def _fmt(x):
    return format(float(x), ".17g")


def write_grid_csv(grid, path):
    """Header ``axis1,axis2,tangle`` then one line per grid point."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([*grid.spec.axis_names, "tangle"])
        for i, x1 in enumerate(grid.axis1):
            for j, x2 in enumerate(grid.axis2):
                writer.writerow([_fmt(x1), _fmt(x2), _fmt(grid.values[i, j])])


def write_grid_json(grid, path):
    payload = {"schema_version": SCHEMA_VERSION, "kind": "grid", **grid.to_dict()}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def read_config(path):
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def _emit(payload):
    print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2))


def _ring(args):
    polar = args.b is not None or args.theta is not None
    if polar and (args.bx is not None or args.bz is not None):
        raise UsageError("give the field either as --bx/--bz or as --b/--theta")
    if polar:
        return from_polar(args.n, args.j, args.b or 0.0, args.theta or 0.0)
    return RingConfig(args.n, args.j, args.bx or 0.0, args.bz or 0.0)


def _add_ring_flags(p):
    p.add_argument("--n", type=int, required=True, help="ring size")
    p.add_argument("--j", type=float, default=1.0, help="Ising coupling J")
    p.add_argument("--bx", type=float, help="transverse field component")
    p.add_argument("--bz", type=float, help="longitudinal field component")
    p.add_argument("--b", type=float, help="field amplitude (with --theta)")
    p.add_argument("--theta", type=float, help="field angle from the z axis, radians")


def cmd_spectrum(args):
    cfg = _ring(args)
    spec = ring_spectrum(cfg)
    payload = {
        "command": "spectrum",
        "ring": {"n_qubits": cfg.n_qubits, "J": cfg.J, "Bx": cfg.Bx, "Bz": cfg.Bz},
        "eigenvalues": spec.energies.tolist(),
    }
    if cfg.n_qubits == 2:
        V = canonical_eigenvectors(spec)
        payload["basis"] = ["00", "01", "10", "11"]
        payload["eigenvectors"] = [
            [[float(a.real) + 0.0, float(a.imag) + 0.0] for a in V[:, k]] for k in range(4)
        ]
    _emit(payload)
    return EXIT_OK


def cmd_tangle(args):
    cfg = _ring(args)
    if not 1 <= args.pair_sep <= cfg.n_qubits // 2:
        raise UsageError(f"--pair-sep must lie in [1, {cfg.n_qubits // 2}]")
    res = thermal_concurrence(cfg, args.t, Pair.at_separation(args.pair_sep))
    _emit({
        "command": "tangle",
        "ring": {"n_qubits": cfg.n_qubits, "J": cfg.J, "Bx": cfg.Bx, "Bz": cfg.Bz},
        "T": args.t,
        "pair_separation": args.pair_sep,
        "concurrence": res.concurrence,
        "tangle": res.tangle,
        "lambdas": res.lambdas.tolist(),
    })
    return EXIT_OK


def _axis(value, what):
    if isinstance(value, str):
        value = value.replace(",", " ").split()
    if len(value) != 3:
        raise UsageError(f"{what} needs MIN MAX STEPS")
    try:
        return float(value[0]), float(value[1]), int(value[2])
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _sweep_settings(args):
    conf = read_config(args.config) if args.config else {}
    known = {"kind", "n", "j", "t", "pair_sep", "axis1", "axis2", "steps",
             "workers", "format", "out", "mask"}
    unknown = set(conf) - known
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    merged = dict(conf)
    for key in known:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            merged[key] = value
    return merged


def cmd_sweep(args):
    s = _sweep_settings(args)
    if "kind" not in s or s["kind"] not in KINDS:
        raise UsageError(f"--kind must be one of {sorted(KINDS)}")
    if "out" not in s:
        raise UsageError("--out is required")
    kind = KINDS[s["kind"]]
    steps = int(s.get("steps", DEFAULT_STEPS))
    (a1, b1), (a2, b2) = DEFAULT_AXES[kind]
    axis1 = _axis(s["axis1"], "axis1") if "axis1" in s else (a1, b1, steps)
    axis2 = _axis(s["axis2"], "axis2") if "axis2" in s else (a2, b2, steps)
    spec = SweepSpec(
        kind,
        n_qubits=int(s.get("n", 2)),
        J=float(s.get("j", 1.0)),
        separation=int(s.get("pair_sep", 1)),
        axis1=axis1,
        axis2=axis2,
        temperature=float(s.get("t", 0.0)),
    )
    mask = str(s.get("mask", "false")).lower() in ("1", "true", "yes")
    grid = run_sweep(spec, workers=int(s.get("workers", 1)), with_mask=mask,
                     timestamp=args.timestamp)
    out = str(s["out"])
    fmt = s.get("format") or ("json" if out.endswith(".json") else "csv")
    if fmt not in ("csv", "json"):
        raise UsageError("--format must be csv or json")
    (write_grid_json if fmt == "json" else write_grid_csv)(grid, out)
    return EXIT_OK


def cmd_optimal_angle(args):
    if args.b <= 0:
        raise UsageError("--b must be positive")
    numeric = theta_star_numeric(args.b, args.t, args.n, Pair.at_separation(args.pair_sep, args.n), args.j)
    analytic, reason = None, None
    if args.n != 2 or args.j != 1.0:
        reason = "closed form applies to the two-qubit ring with J = 1"
    elif args.t <= 0:
        reason = "closed form needs T > 0"
    else:
        try:
            analytic = theta_star_analytic(args.b, args.t).theta
        except ValueError as exc:
            reason = str(exc)
    _emit({
        "command": "optimal-angle",
        "B": args.b, "T": args.t, "n_qubits": args.n, "J": args.j,
        "pair_separation": args.pair_sep,
        "numeric": {"theta": numeric.theta, "tangle": numeric.tangle},
        "analytic": None if analytic is None else {"theta": analytic},
        "analytic_unavailable": reason,
        "difference": None if analytic is None else abs(analytic - numeric.theta),
    })
    return EXIT_OK


def cmd_mixing_check(args):
    cfg = RingConfig(2, args.j, args.bx, args.bz)
    if args.demo == "four-level":
        report = four_level_counterexample(cfg, args.t)
    else:
        report = level_mixing_report(cfg, args.t, {"two-level": 2, "three-level": 3}[args.demo])
    _emit({
        "command": "mixing-check",
        "demo": args.demo,
        "ring": {"n_qubits": 2, "J": cfg.J, "Bx": cfg.Bx, "Bz": cfg.Bz},
        "T": args.t,
        **report.as_dict(),
    })
    return EXIT_OK


def cmd_approx_check(args):
    rows = []
    for T in args.t:
        root, small_t = max_condition_exact(T), max_condition_approx(T)
        rows.append({
            "T": T,
            "gap_condition_root": root,
            "gap_small_T": small_t,
            "relative_difference": abs(root - small_t) / root,
            "gap_direct_maximum": two_level_optimal_gap(T),
        })
    payload = {"command": "approx-check", "max_condition": rows}
    if args.bx is not None:
        bz = args.bz or 0.0
        spec = ring_spectrum(RingConfig(2, 1.0, args.bx, bz))
        payload["field"] = {
            "Bx": args.bx, "Bz": bz,
            "gap_approx": gap_approx(args.bx, bz),
            "gap_exact": float(spec.energies[1] - spec.energies[0]),
            "ground_energy_approx": ground_energy_approx(args.bx, bz),
            "ground_energy_exact": spec.ground_energy,
            "ground_concurrence_approx": ground_concurrence_approx(args.bx, bz),
            "ground_concurrence_exact": exact_ground_concurrence(args.bx, bz),
        }
    _emit(payload)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isingtangle",
        description="Thermal pairwise entanglement in Ising qubit rings.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues (and two-qubit eigenvectors)")
    _add_ring_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tangle", help="thermal concurrence and tangle of one pair")
    _add_ring_flags(p)
    p.add_argument("--t", type=float, default=0.0, help="temperature (0 allowed)")
    p.add_argument("--pair-sep", type=int, default=1, help="ring distance of the pair")
    p.set_defaults(func=cmd_tangle)

    p = sub.add_parser("sweep", help="tangle over a parameter grid")
    p.add_argument("--config", help="key = value file; flags override it")
    p.add_argument("--kind", choices=sorted(KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=float)
    p.add_argument("--t", type=float, help="temperature for field-field grids")
    p.add_argument("--pair-sep", type=int)
    p.add_argument("--axis1", nargs=3, metavar=("MIN", "MAX", "STEPS"))
    p.add_argument("--axis2", nargs=3, metavar=("MIN", "MAX", "STEPS"))
    p.add_argument("--steps", type=int, help="steps for default axes")
    p.add_argument("--workers", type=int)
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--mask", action="store_true", help="attach approximation validity mask")
    p.add_argument("--timestamp", help="string stored in JSON metadata")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimal-angle", help="field angle maximising the tangle")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--pair-sep", type=int, default=1)
    p.set_defaults(func=cmd_optimal_angle)

    p = sub.add_parser("mixing-check", help="concurrence mixing rule vs exact")
    p.add_argument("--demo", choices=["two-level", "three-level", "four-level"], required=True)
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--bx", type=float, default=1.0)
    p.add_argument("--bz", type=float, default=0.0)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=cmd_mixing_check)

    p = sub.add_parser("approx-check", help="closed-form approximations vs exact")
    p.add_argument("--t", type=float, nargs="+", default=[0.05, 0.1, 0.2])
    p.add_argument("--bx", type=float)
    p.add_argument("--bz", type=float)
    p.set_defaults(func=cmd_approx_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE
